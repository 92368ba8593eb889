#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/poly.hpp"
#include "rodrigues/series.hpp"

namespace rodrigues {

// Theta_n(x) = alpha^{phi1(x)} beta^{-phi2(x)} q(x).
struct ReducedKernel {
  int n = 0;
  Poly q;
};

// One rung of the derivative ladder: q' - Lb * phi2' * q.
Poly ladder_step(const Poly& q, const Poly& phi2_prime);

// Theta'_m divided by the prefactor: q' + (La phi1' - Lb phi2') q.
Poly reduced_derivative(const Poly& q, const FamilyPolys& polys);

ReducedKernel reduced_kernel(const FamilySpec& family, int n);
// q_0 .. q_{n_max}.
std::vector<Poly> reduced_kernels(const FamilySpec& family, int n_max);
std::vector<Poly> reduced_kernels(const FamilyPolys& polys, int n_max);

/// Theta_n(x0) in double precision for numeric alpha and beta. The logs are
/// substituted into the data first and the ladder runs in floating point.
double theta_eval(const FamilySpec& family, int n, double x0);

/// Taylor jet of q_n at x0 (prefactor excluded). Exact jets carry Lb as a
/// symbol; numeric jets need a numeric beta.
using KernelJet = std::variant<TruncatedSeries<SymCoeff>, TruncatedSeries<double>>;
KernelJet theta_jet(const FamilySpec& family, int n, const Rational& x0, int order);

/// Thread-safe memo of reduced kernels keyed by (family digest, n).
class KernelCache {
 public:
  Poly get(const FamilySpec& family, int n);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::vector<Poly>> ladders_;
};

}  // namespace rodrigues
