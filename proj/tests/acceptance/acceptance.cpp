// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rodrigues/bilateral.hpp"
#include "rodrigues/genfun.hpp"
#include "rodrigues/kernel.hpp"
#include "rodrigues/ode.hpp"
#include "rodrigues/random.hpp"
#include "rodrigues/recurrence.hpp"
#include "rodrigues/series.hpp"

using namespace rodrigues;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

const std::vector<FamilySpec>& families() {
  static const auto f = test::random_families();
  return f;
}

// 1: generating function on 20 families, plus corruption of every coefficient of q_3.
void genfun_identity(Outcome& o) {
  int corruptions = 0;
  for (std::size_t i = 0; i < families().size(); ++i) {
    const FamilySpec& f = families()[i];
    o.check(verify_genfun(f, 16).status == Status::verified, "family " + std::to_string(i) + " not verified");
    const auto clean = reduced_kernels(f, 16);
    const int deg = std::max(clean[3].degree(), 0);
    for (int power = 0; power <= deg; ++power) {
      auto bad = clean;
      bad[3] += Poly::monomial(SymCoeff(1), static_cast<unsigned>(power));
      const auto r = verify_genfun_kernels(f, bad, 16);
      ++corruptions;
      o.check(r.status == Status::failed && r.first_failure && r.first_failure->t_order == 3,
              "corruption of q_3 at x^" + std::to_string(power) + " missed");
    }
  }
  o.detail << "20 families at t^16, " << corruptions << " corruptions of q_3 caught";
}

// 2: six recurrences, n <= 12.
void recurrences(Outcome& o) {
  int psi_one = 0;
  for (std::size_t i = 0; i < families().size(); ++i) {
    const FamilySpec& f = families()[i];
    psi_one += f.psi_is_one();
    for (const auto& r : sweep(f, 12)) {
      const bool expect_skip = r.identity == "cor22" && !f.psi_is_one();
      o.check(r.status == (expect_skip ? Status::skipped : Status::verified),
              r.identity + " on family " + std::to_string(i));
    }
  }
  o.check(psi_one > 0, "no psi = 1 family");
  o.detail << "aa9 aa10 cor21 thm23 aa11 on 20 families, cor22 on " << psi_one << ", n <= 12";
}

// 3: Hermite kernels against the three-term recurrence, and the Hermite ODE.
void hermite(Outcome& o) {
  const auto h = oracle::hermite(15);
  const auto q = reduced_kernels(test::hermite(), 15);
  for (int n = 0; n <= 15; ++n) {
    Poly expected = Poly::from_rationals(h[n]);
    if (n % 2) expected = -expected;
    o.check(test::unit_logs(q[n]) == expected, "q_" + std::to_string(n) + " != (-1)^n H_n");
  }
  const OdeSpec ode = synthesize_ode(test::hermite(), 2)
                          .substitute(Symbol::log_alpha, Rational(1))
                          .substitute(Symbol::log_beta, Rational(1));
  // y'' - 2x y' + 2n y
  const OdeSpec printed{2, {Poly(index_symbol() * SymCoeff(2)), test::P({0, -2}), Poly(1)}};
  o.check(ode == printed, "ODE differs from y'' - 2xy' + 2ny");
  o.detail << "q_n = (-1)^n H_n for n <= 15; ODE y'' - 2xy' + 2ny";
}

Poly in_n(std::initializer_list<std::pair<unsigned, std::vector<long>>> terms) {
  Poly out;
  for (const auto& [power, coeffs] : terms) {
    SymCoeff c;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      c += SymCoeff::symbol(Symbol::index, static_cast<unsigned>(e)) * SymCoeff(coeffs[e]);
    out += Poly::monomial(c, power);
  }
  return out;
}

// 4: printed fourth-order equation for phi1 = phi2 = -x^4.
void quartic(Outcome& o) {
  const FamilySpec f = test::quartic(LogBase::euler());
  const OdeSpec ode = synthesize_ode(f, 4)
                          .substitute(Symbol::log_alpha, Rational(1))
                          .substitute(Symbol::log_beta, Rational(1));
  const std::vector<Poly> printed{
      in_n({{8, {0, -192}}, {4, {0, -384, -48}}, {0, {0, -44, -24, -4}}}),
      in_n({{9, {64}}, {5, {144, -96}}, {1, {24, -60, -12}}}),
      in_n({{6, {48}}, {2, {36, -12}}}),
      in_n({{3, {12}}}),
      Poly(1)};
  for (int j = 0; j <= 4; ++j)
    o.check(ode.coeffs[static_cast<std::size_t>(j)] == printed[static_cast<std::size_t>(j)],
            "coefficient of y^(" + std::to_string(j) + ")");
  const OdeSpec symbolic = synthesize_ode(f, 4);
  for (int n = 0; n <= 10; ++n)
    o.check(ode_residual(symbolic, f, n).is_zero(), "residual at n = " + std::to_string(n));
  o.detail << "all five coefficients match; residual zero for n <= 10";
}

// 5: closed forms against the general synthesis, and residuals up to m = 6.
void closed_forms(Outcome& o) {
  std::mt19937_64 rng(52);
  for (int m = 2; m <= 4; ++m) {
    for (int i = 0; i < 10; ++i) {
      const FamilySpec f = random_ode_family(rng, m, 4);
      o.check(closed_form_ode(f, m) == synthesize_ode(f, m), "m = " + std::to_string(m));
    }
  }
  for (int m = 1; m <= 6; ++m) {
    const FamilySpec f = random_ode_family(rng, m, 3);
    const OdeSpec ode = synthesize_ode(f, m);
    for (int n = 0; n <= 10; ++n)
      o.check(ode_residual(ode, f, n).is_zero(), "residual m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  o.detail << "30 closed-form matches (m = 2..4); residual zero for m <= 6, n <= 10";
}

// 6: kernels of phi1 = phi2 = -x^2 at x/2 are H_n(x, 1).
void kampe_de_feriet(Outcome& o) {
  const auto q = reduced_kernels(test::hkdf(), 10);
  for (int n = 0; n <= 10; ++n)
    o.check(test::unit_logs(q[n]).scale_argument(Rational(1, 2)) == Poly::from_rationals(oracle::kampe_de_feriet(n)),
            "n = " + std::to_string(n));
  o.detail << "q_n(x/2) = H_n(x, 1) for n <= 10";
}

// 7: bilateral identity on 10 random specs plus bilinear and Bernoulli checks.
void bilateral(Outcome& o) {
  std::mt19937_64 rng(61);
  RandomFamilyOptions options;
  options.max_degree_phi1 = options.max_degree_phi2 = options.max_degree_psi = 3;
  int apostol = 0;
  for (int i = 0; i < 10; ++i) {
    const BilateralSpec spec = random_bilateral_spec(rng, i);
    apostol += std::holds_alternative<ApostolBernoulliOmega>(spec.omega);
    const FamilySpec f = random_family(rng, options);
    o.check(verify_bilateral(spec, f, 8, 8).status == Status::verified, "random spec " + std::to_string(i));
  }
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 3)}) {
    BilateralSpec spec;
    spec.omega = ApostolBernoulliOmega{1, lambda};
    const auto r = verify_bilateral(spec, families()[0], 8, 8);
    o.check(r.status == Status::verified && r.notes.front() == "lambda: closed form",
            "Apostol-Bernoulli generator, lambda = " + lambda.str());
  }
  const FamilySpec& f = families()[3];
  BilateralSpec bilinear;
  bilinear.omega = ThetaOmega{f};
  o.check(verify_bilateral(bilinear, f, 8, 8).status == Status::verified, "bilinear product form");
  const auto lhs = bilateral_lhs(bilinear, f, 8, 8);
  o.check(swap_variables(lhs) == lhs, "bilinear symmetry");

  const auto b = oracle::bernoulli_by_division(2);
  const Poly b1 = Poly::from_rationals(std::vector<Rational>{b[1], Rational(1)});
  const Poly b2 = Poly::from_rationals(std::vector<Rational>{b[2], Rational(2) * b[1], Rational(1)});
  o.check(b1 == Poly::from_rationals(std::vector<Rational>{Rational(-1, 2), Rational(1)}), "oracle B_1");
  o.check(b2 == Poly::from_rationals(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}), "oracle B_2");
  o.check(apostol_bernoulli(1, 1, Rational(1)) == b1, "B_1(y)");
  o.check(apostol_bernoulli(2, 1, Rational(1)) == b2, "B_2(y)");
  o.detail << "10 random specs (" << apostol << " Apostol-Bernoulli) at N = K = 8, lambda in {1, 2, 1/3}, "
           << "bilinear and symmetric, B_1 and B_2 match";
}

// 8: floating evaluation against exact kernels, and jets against exact kernels.
void coherence(Outcome& o) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> point(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < families().size(); ++i) {
    FamilySpec f = families()[i];
    f.alpha = LogBase::numeric(1.5);
    f.beta = LogBase::numeric(0.8);
    const FamilyPolys polys = family_polys(f);
    const SymbolValues v{f.alpha.log(), f.beta.log(), 0.0};
    const auto q = reduced_kernels(polys, 4);
    for (int k = 0; k < 20; ++k) {
      const double x = point(rng);
      const double pre = std::exp(v.log_alpha * polys.phi1.evaluate(x, v) - v.log_beta * polys.phi2.evaluate(x, v));
      for (int n = 0; n <= 4; ++n) {
        const double exact = pre * q[n].evaluate(x, v);
        const double rel = std::abs(theta_eval(f, n, x) - exact) / std::max(std::abs(exact), 1e-300);
        if (exact != 0.0) worst = std::max(worst, rel);
        o.check(exact == 0.0 ? std::abs(theta_eval(f, n, x)) < 1e-10 : rel <= 1e-10,
                "theta_eval on family " + std::to_string(i));
      }
    }
    const Rational x0 = random_rational(rng, 5, 3);
    const auto exact = reduced_kernels(families()[i], 4);
    for (int n = 0; n <= 4; ++n) {
      const auto jet = std::get<TruncatedSeries<SymCoeff>>(theta_jet(families()[i], n, x0, 6));
      const auto shift = poly_taylor_shift(exact[n], 6);
      for (int j = 0; j <= 6; ++j) o.check(jet[j] == shift[j].evaluate(x0), "jet on family " + std::to_string(i));
    }
  }
  o.detail << "20 families x 20 points, worst relative error " << worst << "; jets exact";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"generating function", genfun_identity},
      {"recurrence suite", recurrences},
      {"Hermite reduction", hermite},
      {"quartic example ODE", quartic},
      {"closed form vs synthesis", closed_forms},
      {"Kampe de Feriet reduction", kampe_de_feriet},
      {"bilateral machinery", bilateral},
      {"numeric/exact coherence", coherence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " [" << criteria[i].first << "] "
              << o.detail.str() << " (" << std::fixed << std::setprecision(1) << secs << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}
