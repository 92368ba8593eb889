#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "rodrigues/ode.hpp"
#include "rodrigues/random.hpp"

namespace rodrigues {
namespace {

using test::P;
using test::poly_fn;

OdeSpec unit_logs(const OdeSpec& ode) {
  return ode.substitute(Symbol::log_alpha, Rational(1)).substitute(Symbol::log_beta, Rational(1));
}

Poly nhat_poly(std::initializer_list<std::pair<unsigned, std::vector<long>>> terms) {
  // Sum over (x power, coefficients of n^0, n^1, ...).
  Poly out;
  for (const auto& [power, coeffs] : terms) {
    SymCoeff c;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      c += SymCoeff::symbol(Symbol::index, static_cast<unsigned>(e)) * SymCoeff(coeffs[e]);
    out += Poly::monomial(c, power);
  }
  return out;
}

TEST(Ladder, FirstOperators) {
  const FamilySpec h = test::hermite();
  const auto l0 = ladder(h, 0);
  ASSERT_EQ(l0.coeffs.size(), 1u);
  EXPECT_EQ(l0.coeffs[0], Poly(1));

  const auto l1 = ladder(h, 1);
  EXPECT_EQ(l1.coeffs[1], Poly(1));
  EXPECT_EQ(l1.coeffs[0], P({0, 2}) * -log_alpha());

  const auto l2 = ladder(h, 2);
  EXPECT_EQ(l2.coeffs[2], Poly(1));
  EXPECT_EQ(l2.coeffs[1], Poly::monomial(log_alpha() * SymCoeff(-4), 1));
  EXPECT_EQ(l2.coeffs[0], Poly::monomial(log_alpha() * log_alpha() * SymCoeff(4), 2) -
                              Poly(log_alpha() * SymCoeff(2)));
}

TEST(Ladder, SatisfiesTheRecursion) {
  const Poly phi1 = P({1, -3, 0, 2});
  const auto ls = ladders(phi1, 6);
  const Poly w = phi1.derivative() * log_alpha();
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i <= j + 1; ++i) {
      Poly expected;
      if (i > 0) expected += ls[j].coeffs[i - 1];
      if (i <= j) expected += ls[j].coeffs[i].derivative() - w * ls[j].coeffs[i];
      EXPECT_EQ(ls[j + 1].coeffs[i], expected);
    }
  }
}

TEST(SynthesizeOde, HermiteEquation) {
  const OdeSpec ode = unit_logs(synthesize_ode(test::hermite(), 2));
  EXPECT_EQ(ode, hermite_reference_ode());
  EXPECT_EQ(ode.coeffs[0], Poly(index_symbol() * SymCoeff(2)));
  EXPECT_EQ(ode.coeffs[1], P({0, -2}));
  EXPECT_EQ(ode.coeffs[2], Poly(1));
}

TEST(SynthesizeOde, QuarticExample) {
  const OdeSpec ode = unit_logs(synthesize_ode(test::quartic(), 4));
  ASSERT_EQ(ode.order, 4);
  EXPECT_EQ(ode.coeffs[4], Poly(1));
  EXPECT_EQ(ode.coeffs[3], P({0, 0, 0, 12}));
  // 48x^6 - 12(n-3)x^2
  EXPECT_EQ(ode.coeffs[2], nhat_poly({{6, {48}}, {2, {36, -12}}}));
  // 64x^9 + (144-96n)x^5 - 12(n^2+5n-2)x
  EXPECT_EQ(ode.coeffs[1], nhat_poly({{9, {64}}, {5, {144, -96}}, {1, {24, -60, -12}}}));
  // -192n x^8 - 48(n^2+8n)x^4 - 4n(n^2+6n+11)
  EXPECT_EQ(ode.coeffs[0], nhat_poly({{8, {0, -192}}, {4, {0, -384, -48}}, {0, {0, -44, -24, -4}}}));
  EXPECT_EQ(ode, quartic_reference_ode());
}

TEST(SynthesizeOde, FirstOrderCase) {
  const FamilySpec f = test::family(poly_fn({0}), poly_fn({2, 3}), poly_fn({1}));
  const OdeSpec ode = synthesize_ode(f, 1);
  ASSERT_EQ(ode.order, 1);
  EXPECT_EQ(ode.coeffs[1], Poly(1));
  EXPECT_EQ(ode.coeffs[0], Poly(log_beta() * SymCoeff(3)));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(ode_residual(ode, f, n).is_zero());
}

TEST(SynthesizeOde, Preconditions) {
  const FamilySpec psi_x = test::family(poly_fn({0, 1}), poly_fn({0, 0, 1}), poly_fn({0, 1}));
  EXPECT_THROW(synthesize_ode(psi_x, 2), PreconditionError);
  EXPECT_THROW(synthesize_ode(test::hermite(), 0), PreconditionError);
  EXPECT_THROW(synthesize_ode(test::hermite(), 3), PreconditionError);
}

TEST(ClosedForm, HermiteAndQuarticExamples) {
  EXPECT_EQ(unit_logs(closed_form_ode(test::hermite(), 2)), hermite_reference_ode());
  EXPECT_EQ(unit_logs(closed_form_ode(test::quartic(), 4)), quartic_reference_ode());
  EXPECT_THROW(closed_form_ode(test::hermite(), 5), PreconditionError);
}

TEST(ClosedForm, CubicFirstDerivativeCoefficient) {
  std::mt19937_64 rng(51);
  const FamilySpec f = random_ode_family(rng, 3, 4);
  const FamilyPolys p = family_polys(f);
  const Poly d1 = p.phi1.derivative(), d2 = p.phi2.derivative();
  const Poly expected = p.phi2.derivative(2) * (log_beta() * (index_symbol() + SymCoeff(2))) -
                        p.phi1.derivative(2) * (log_alpha() * SymCoeff(3)) -
                        d1 * d2 * (log_alpha() * log_beta() * SymCoeff(2)) +
                        d1 * d1 * (log_alpha() * log_alpha() * SymCoeff(3));
  EXPECT_EQ(closed_form_ode(f, 3).coeffs[1], expected);
}

TEST(ClosedForm, AgreesWithSynthesisOnRandomFamilies) {
  std::mt19937_64 rng(52);
  for (int m = 2; m <= 4; ++m) {
    for (int i = 0; i < 10; ++i) {
      const FamilySpec f = random_ode_family(rng, m, 4);
      EXPECT_EQ(closed_form_ode(f, m), synthesize_ode(f, m)) << "m = " << m << ", family " << i;
    }
  }
}

TEST(ClosedForm, PrintedQuarticConstantTermDiffersGenerically) {
  std::mt19937_64 rng(53);
  const FamilySpec f = random_ode_family(rng, 4, 3);
  const OdeSpec printed = closed_form_ode(f, 4, Transcription::as_printed);
  const OdeSpec synth = synthesize_ode(f, 4);
  EXPECT_NE(printed.coeffs[0], synth.coeffs[0]);
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(printed.coeffs[j], synth.coeffs[j]);
  bool annihilates = true;
  for (int n = 0; n <= 3; ++n) annihilates = annihilates && ode_residual(printed, f, n).is_zero();
  EXPECT_FALSE(annihilates);
}

TEST(OdeResidual, ExamplesAndMutation) {
  EXPECT_TRUE(ode_residual(synthesize_ode(test::hermite(), 2), test::hermite(), 5).is_zero());
  EXPECT_TRUE(ode_residual(synthesize_ode(test::quartic(), 4), test::quartic(), 3).is_zero());
  OdeSpec bad = synthesize_ode(test::hermite(), 2);
  bad.coeffs[1] += P({1});
  EXPECT_FALSE(ode_residual(bad, test::hermite(), 2).is_zero());
}

TEST(OdeResidual, QuarticUpToTen) {
  const OdeSpec ode = synthesize_ode(test::quartic(LogBase::euler()), 4);
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(ode_residual(ode, test::quartic(LogBase::euler()), n).is_zero());
}

TEST(OdeResidual, SynthesisUpToOrderSix) {
  std::mt19937_64 rng(54);
  for (int m = 1; m <= 6; ++m) {
    const FamilySpec f = random_ode_family(rng, m, 3);
    const OdeSpec ode = synthesize_ode(f, m);
    for (int n = 0; n <= 10; ++n) EXPECT_TRUE(ode_residual(ode, f, n).is_zero()) << "m = " << m << ", n = " << n;
  }
}

TEST(OdeResidual, ConstantPhi1) {
  const FamilySpec f = test::family(poly_fn({5}), poly_fn({1, 0, 2, -1}), poly_fn({1}));
  const OdeSpec ode = synthesize_ode(f, 3);
  EXPECT_FALSE(ode.coeffs[1].contains(Symbol::log_alpha));
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(ode_residual(ode, f, n).is_zero());
}

}  // namespace
}  // namespace rodrigues
