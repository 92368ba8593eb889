#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rodrigues/bilateral.hpp"
#include "rodrigues/kernel.hpp"
#include "rodrigues/random.hpp"

namespace rodrigues {
namespace {

using test::P;
using test::poly_fn;

TEST(ApostolBernoulli, ClassicalBernoulliPolynomials) {
  EXPECT_EQ(apostol_bernoulli(0, 1, Rational(1)), P({1}));
  EXPECT_EQ(apostol_bernoulli(1, 1, Rational(1)), Poly::from_rationals(std::vector<Rational>{Rational(-1, 2), 1}));
  EXPECT_EQ(apostol_bernoulli(2, 1, Rational(1)),
            Poly::from_rationals(std::vector<Rational>{Rational(1, 6), -1, 1}));
}

TEST(ApostolBernoulli, AgreesWithBothOracles) {
  const auto by_recurrence = oracle::bernoulli_numbers(12);
  const auto by_division = oracle::bernoulli_by_division(12);
  EXPECT_EQ(by_recurrence, by_division);
  for (int n = 0; n <= 12; ++n) {
    const Poly b = apostol_bernoulli(n, 1, Rational(1));
    EXPECT_EQ(b, Poly::from_rationals(oracle::bernoulli_polynomial(n))) << "n = " << n;
    EXPECT_EQ(b.degree(), n);
    EXPECT_EQ(b.leading(), SymCoeff(1));
    EXPECT_EQ(b.evaluate(Rational(0)), SymCoeff(by_recurrence[n]));
  }
}

TEST(ApostolBernoulli, LambdaNotOne) {
  // t / (2 e^t - 1) = t - 2 t^2 + ...: coefficient of t^1/1! is 1, of t^2/2! is -4.
  EXPECT_EQ(apostol_bernoulli(0, 1, Rational(2)), Poly());
  EXPECT_EQ(apostol_bernoulli(1, 1, Rational(2)), P({1}));
  EXPECT_EQ(apostol_bernoulli(2, 1, Rational(2)), P({-4, 2}));
  // lambda = 0: (-t)^order e^{yt}
  EXPECT_EQ(apostol_bernoulli(2, 2, Rational(0)), P({2}));
}

TEST(ApostolBernoulli, HigherOrderIsAPower) {
  const auto g1 = apostol_bernoulli_generator(1, Rational(1, 3), 8);
  const auto g3 = apostol_bernoulli_generator(3, Rational(1, 3), 8);
  // e^{yt} factors multiply too, so compare at y = 0 via evaluation.
  TruncatedSeries<Poly> base(SeriesVar::t, 8), cube(SeriesVar::t, 8);
  for (int i = 0; i <= 8; ++i) {
    base[i] = Poly(g1[i].evaluate(Rational(0)));
    cube[i] = Poly(g3[i].evaluate(Rational(0)));
  }
  EXPECT_EQ(series_pow(base, 3), cube);
}

TEST(LambdaSeries, TableAssembly) {
  BilateralSpec spec;
  spec.omega = TableOmega{{P({1}), P({0, 1}), P({0, 0, 1})}};
  const auto s = lambda_series(spec, 2);
  EXPECT_EQ(s[0], P({1}));
  EXPECT_EQ(s[1], P({0, 1}));
  EXPECT_EQ(s[2], Poly::monomial(SymCoeff(Rational(1, 2)), 2));

  spec.a = std::vector<Rational>{Rational(3)};
  spec.mu = 1;
  const auto k0 = lambda_series(spec, 0);
  EXPECT_EQ(k0.order(), 0);
  EXPECT_EQ(k0[0], P({0, 3}));
}

TEST(LambdaSeries, HermiteTheta) {
  BilateralSpec spec;
  spec.omega = ThetaOmega{test::hermite(LogBase::euler())};
  const auto s = lambda_series(spec, 2);
  EXPECT_EQ(test::unit_logs(s[0]), P({1}));
  EXPECT_EQ(test::unit_logs(s[1]), P({0, -2}));
  EXPECT_EQ(test::unit_logs(s[2]), P({-1, 0, 2}));
  EXPECT_EQ(*lambda_closed_form(spec, 6), lambda_series(spec, 6));
}

TEST(LambdaSeries, ApostolClosedFormMatchesSum) {
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 3)}) {
    BilateralSpec spec;
    spec.omega = ApostolBernoulliOmega{1, lambda};
    EXPECT_EQ(*lambda_closed_form(spec, 8), lambda_series(spec, 8));
  }
}

TEST(BilateralSpec, RejectsBadParameters) {
  BilateralSpec spec;
  spec.omega = ApostolBernoulliOmega{};
  spec.nu = 0;
  EXPECT_THROW(spec.validate(), InputError);
  spec.nu = 1;
  spec.p = 0;
  EXPECT_THROW(spec.validate(), InputError);
  spec.p = 1;
  spec.a = std::vector<Rational>{Rational(1), Rational(0)};
  EXPECT_THROW(spec.validate(), InputError);
}

TEST(PhiPoly, Examples) {
  const FamilySpec f = test::family(poly_fn({0, 1}), poly_fn({0, 0, 0, 1}), poly_fn({1, 1}));
  BilateralSpec spec;
  spec.omega = TableOmega{{P({2}), P({0, 1}), P({1, 1})}};
  spec.p = 3;
  spec.mu = 1;
  const auto q = reduced_kernels(f, 2);

  const auto single = phi_poly(spec, f, 2);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], BiPoly::in_x(q[2]) * BiPoly::in_y(P({0, 1})) * SymCoeff(Rational(1, 2)));

  spec.p = 1;
  spec.mu = 0;
  const auto two = phi_poly(spec, f, 1);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], BiPoly::in_x(q[1]) * BiPoly::in_y(P({2})));
  EXPECT_EQ(two[1], BiPoly::in_x(q[0]) * BiPoly::in_y(P({0, 1})));
}

TEST(PhiPoly, HermiteBilinear) {
  BilateralSpec spec;
  spec.omega = ThetaOmega{test::hermite()};
  spec.p = 2;
  const auto terms = phi_poly(spec, test::hermite(), 2);
  ASSERT_EQ(terms.size(), 2u);
  const SymCoeff lb = log_beta();
  EXPECT_EQ(terms[0], BiPoly::in_x(Poly::monomial(lb * lb * SymCoeff(2), 2) - Poly(lb)));
  EXPECT_EQ(terms[1], BiPoly::in_y(Poly::monomial(lb * SymCoeff(-2), 1)));
}

TEST(VerifyBilateral, RandomSpecs) {
  std::mt19937_64 rng(61);
  RandomFamilyOptions options;
  options.max_degree_phi1 = options.max_degree_phi2 = options.max_degree_psi = 3;
  for (int i = 0; i < 10; ++i) {
    const BilateralSpec spec = random_bilateral_spec(rng, i);
    const FamilySpec f = random_family(rng, options);
    const auto r = verify_bilateral(spec, f, 8, 8);
    EXPECT_EQ(r.status, Status::verified) << "spec " << i;
  }
}

TEST(VerifyBilateral, ApostolLambdaTwoUsesTheGenerator) {
  BilateralSpec spec;
  spec.omega = ApostolBernoulliOmega{1, Rational(2)};
  const auto r = verify_bilateral(spec, test::hermite(), 8, 8);
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.notes.front(), "lambda: closed form");
}

TEST(VerifyBilateral, BilinearProductForm) {
  const FamilySpec f = test::family(poly_fn({0, 1}), poly_fn({0, 1, 1}), poly_fn({1, 0, 2}));
  BilateralSpec spec;
  spec.omega = ThetaOmega{f};
  const auto r = verify_bilateral(spec, f, 8, 8);
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.notes.front(), "lambda: closed form");
  const auto lhs = bilateral_lhs(spec, f, 8, 8);
  EXPECT_EQ(swap_variables(lhs), lhs);
}

TEST(VerifyBilateral, BernoulliTableAgainstGenerator) {
  BilateralSpec spec;
  std::vector<Poly> table;
  for (int k = 0; k <= 8; ++k) table.push_back(apostol_bernoulli(k, 1, Rational(1)));
  spec.omega = TableOmega{table};
  EXPECT_EQ(verify_bilateral(spec, test::hkdf(), 6, 6).status, Status::verified);
  // A table of Bernoulli polynomials sums to the generator; one bad entry does not.
  BilateralSpec ab;
  ab.omega = ApostolBernoulliOmega{};
  EXPECT_EQ(lambda_series(spec, 8), *lambda_closed_form(ab, 8));
  table[4] += P({1});
  spec.omega = TableOmega{table};
  EXPECT_NE(lambda_series(spec, 8), *lambda_closed_form(ab, 8));
}

}  // namespace
}  // namespace rodrigues
