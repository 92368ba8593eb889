#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/bilateral.hpp"

namespace rodrigues {

// Deterministic generators for randomized verification suites.
struct RandomFamilyOptions {
  int max_degree_phi1 = 5;
  int max_degree_phi2 = 5;
  int max_degree_psi = 5;
  int max_numerator = 9;
  int max_denominator = 4;
  bool psi_one = false;
};

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator,
                         bool nonzero = false);
std::vector<Rational> random_coeffs(std::mt19937_64& rng, int degree, int max_numerator,
                                    int max_denominator);
FamilySpec random_family(std::mt19937_64& rng, const RandomFamilyOptions& options);
// Family with psi = 1, deg phi2 exactly m and a nonconstant phi1.
FamilySpec random_ode_family(std::mt19937_64& rng, int m, int max_degree_phi1);
BilateralSpec random_bilateral_spec(std::mt19937_64& rng, int index);

}  // namespace rodrigues
