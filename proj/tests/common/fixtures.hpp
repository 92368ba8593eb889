#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/poly.hpp"
#include "rodrigues/random.hpp"
#include "rodrigues/rational.hpp"

namespace rodrigues::test {

inline AnalyticFunction poly_fn(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return AnalyticFunction::polynomial(std::move(v));
}

inline Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly::from_rationals(v);
}

inline FamilySpec family(AnalyticFunction phi1, AnalyticFunction phi2, AnalyticFunction psi,
                         LogBase alpha = LogBase::symbolic(), LogBase beta = LogBase::symbolic()) {
  FamilySpec f{std::move(phi1), std::move(phi2), std::move(psi), alpha, beta};
  f.validate();
  return f;
}

// phi1 = phi2 = x^2, psi = 1.
inline FamilySpec hermite(LogBase base = LogBase::symbolic()) {
  return family(poly_fn({0, 0, 1}), poly_fn({0, 0, 1}), poly_fn({1}), base, base);
}

inline FamilySpec quartic(LogBase base = LogBase::symbolic()) {
  return family(poly_fn({0, 0, 0, 0, -1}), poly_fn({0, 0, 0, 0, -1}), poly_fn({1}), base, base);
}

inline FamilySpec hkdf(LogBase base = LogBase::symbolic()) {
  return family(poly_fn({0, 0, -1}), poly_fn({0, 0, -1}), poly_fn({1}), base, base);
}

// Twenty random polynomial families, degrees <= 5, the same for every test
// run; every fourth one has psi = 1.
inline std::vector<FamilySpec> random_families(std::uint64_t seed = 20240531, int count = 20,
                                               int max_degree = 5) {
  std::mt19937_64 rng(seed);
  std::vector<FamilySpec> out;
  for (int i = 0; i < count; ++i) {
    RandomFamilyOptions o;
    o.max_degree_phi1 = o.max_degree_phi2 = o.max_degree_psi = max_degree;
    o.psi_one = i % 4 == 3;
    out.push_back(random_family(rng, o));
  }
  return out;
}

inline Poly unit_logs(const Poly& p) {
  return p.substitute(Symbol::log_alpha, Rational(1)).substitute(Symbol::log_beta, Rational(1));
}

}  // namespace rodrigues::test
