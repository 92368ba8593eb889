#include "rodrigues/random.hpp"

namespace rodrigues {

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator, bool nonzero) {
  std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<int> den(1, std::max(1, max_denominator));
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Rational(n, den(rng));
}

std::vector<Rational> random_coeffs(std::mt19937_64& rng, int degree, int max_numerator,
                                    int max_denominator) {
  std::vector<Rational> out;
  for (int i = 0; i <= degree; ++i)
    out.push_back(random_rational(rng, max_numerator, max_denominator, i == degree));
  return out;
}

FamilySpec random_family(std::mt19937_64& rng, const RandomFamilyOptions& o) {
  const auto degree = [&](int max) { return std::uniform_int_distribution<int>(0, max)(rng); };
  FamilySpec family;
  family.phi1 = AnalyticFunction::polynomial(
      random_coeffs(rng, degree(o.max_degree_phi1), o.max_numerator, o.max_denominator));
  family.phi2 = AnalyticFunction::polynomial(
      random_coeffs(rng, degree(o.max_degree_phi2), o.max_numerator, o.max_denominator));
  family.psi = o.psi_one ? AnalyticFunction::polynomial({Rational(1)})
                         : AnalyticFunction::polynomial(random_coeffs(
                               rng, degree(o.max_degree_psi), o.max_numerator, o.max_denominator));
  family.validate();
  return family;
}

FamilySpec random_ode_family(std::mt19937_64& rng, int m, int max_degree_phi1) {
  const int d1 = std::uniform_int_distribution<int>(1, std::max(1, max_degree_phi1))(rng);
  FamilySpec family;
  family.phi1 = AnalyticFunction::polynomial(random_coeffs(rng, d1, 9, 4));
  family.phi2 = AnalyticFunction::polynomial(random_coeffs(rng, m, 9, 4));
  family.psi = AnalyticFunction::polynomial({Rational(1)});
  return family;
}

BilateralSpec random_bilateral_spec(std::mt19937_64& rng, int index) {
  static const Rational lambdas[] = {Rational(1), Rational(2), Rational(1, 3)};
  BilateralSpec spec;
  std::uniform_int_distribution<int> p_dist(1, 3);
  std::uniform_int_distribution<int> mu_dist(0, 3);
  std::uniform_int_distribution<int> nu_dist(1, 2);
  switch (index % 3) {
    case 0:
      spec.omega = ApostolBernoulliOmega{std::uniform_int_distribution<unsigned>(1, 2)(rng),
                                         lambdas[(index / 3) % 3]};
      break;
    case 1: {
      RandomFamilyOptions o;
      o.max_degree_phi1 = 3;
      o.max_degree_phi2 = 3;
      o.max_degree_psi = 2;
      spec.omega = ThetaOmega{random_family(rng, o)};
      break;
    }
    default: {
      TableOmega table;
      for (int k = 0; k <= 3 + 2 * 8; ++k)
        table.values.push_back(Poly::from_rationals(random_coeffs(rng, k % 4, 9, 3)));
      spec.omega = std::move(table);
      break;
    }
  }
  std::vector<Rational> a;
  for (int k = 0; k <= 8; ++k) a.push_back(random_rational(rng, 9, 5, true));
  spec.a = std::move(a);
  spec.p = p_dist(rng);
  spec.mu = mu_dist(rng);
  spec.nu = nu_dist(rng);
  return spec;
}

}  // namespace rodrigues
