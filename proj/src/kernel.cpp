#include "rodrigues/kernel.hpp"

#include <cmath>

#include "rodrigues/errors.hpp"

namespace rodrigues {

Poly ladder_step(const Poly& q, const Poly& phi2_prime) {
  return q.derivative() - (phi2_prime * q) * log_beta();
}

Poly reduced_derivative(const Poly& q, const FamilyPolys& polys) {
  const Poly weight = polys.phi1.derivative() * log_alpha() - polys.phi2.derivative() * log_beta();
  return q.derivative() + weight * q;
}

std::vector<Poly> reduced_kernels(const FamilyPolys& polys, int n_max) {
  if (n_max < 0) throw PreconditionError("kernel index must be nonnegative");
  const Poly phi2_prime = polys.phi2.derivative();
  std::vector<Poly> q;
  q.reserve(static_cast<std::size_t>(n_max) + 1);
  q.push_back(polys.psi);
  for (int n = 0; n < n_max; ++n) q.push_back(ladder_step(q.back(), phi2_prime));
  return q;
}

std::vector<Poly> reduced_kernels(const FamilySpec& family, int n_max) {
  return reduced_kernels(family_polys(family), n_max);
}

ReducedKernel reduced_kernel(const FamilySpec& family, int n) {
  auto q = reduced_kernels(family, n);
  return ReducedKernel{n, std::move(q.back())};
}

namespace {

using DoublePoly = std::vector<double>;

DoublePoly to_double(const Poly& p) {
  DoublePoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    const auto r = c.as_rational();
    if (!r) throw PreconditionError("family data must have rational coefficients");
    out.push_back(r->to_double());
  }
  return out;
}

double horner(const DoublePoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DoublePoly derivative(const DoublePoly& p) {
  if (p.size() <= 1) return {};
  DoublePoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = static_cast<double>(i) * p[i];
  return out;
}

// q' - lb * w * q in floating point.
DoublePoly numeric_ladder_step(const DoublePoly& q, const DoublePoly& w, double lb) {
  DoublePoly out = derivative(q);
  if (!q.empty() && !w.empty()) {
    if (out.size() < q.size() + w.size() - 1) out.resize(q.size() + w.size() - 1, 0.0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) out[i + j] -= lb * q[i] * w[j];
  }
  return out;
}

}  // namespace

double theta_eval(const FamilySpec& family, int n, double x0) {
  if (family.alpha.is_symbolic() || family.beta.is_symbolic())
    throw PreconditionError("theta_eval needs numeric alpha and beta");
  if (n < 0) throw PreconditionError("kernel index must be nonnegative");
  const FamilyPolys polys = family_polys(family);
  const double la = family.alpha.log();
  const double lb = family.beta.log();
  const DoublePoly phi1 = to_double(polys.phi1);
  const DoublePoly phi2 = to_double(polys.phi2);
  const DoublePoly w = derivative(phi2);
  DoublePoly q = to_double(polys.psi);
  for (int i = 0; i < n; ++i) q = numeric_ladder_step(q, w, lb);
  return std::exp(la * horner(phi1, x0) - lb * horner(phi2, x0)) * horner(q, x0);
}

KernelJet theta_jet(const FamilySpec& family, int n, const Rational& x0, int order) {
  if (n < 0 || order < 0) throw PreconditionError("jet index and order must be nonnegative");
  const Jet psi = jet_at(family.psi, x0, n + order);
  // phi2 needs one extra order: its derivative is taken before the ladder.
  const Jet phi2 = jet_at(family.phi2, x0, n + order + 1);

  if (psi.exact() && phi2.exact()) {
    const auto lift = [](const TruncatedSeries<Rational>& s) {
      TruncatedSeries<SymCoeff> out(SeriesVar::t, s.order());
      for (int i = 0; i <= s.order(); ++i) out[i] = SymCoeff(s[i]);
      return out;
    };
    TruncatedSeries<SymCoeff> q = lift(psi.exact_series());
    const TruncatedSeries<SymCoeff> w = lift(phi2.exact_series()).derivative().scaled(log_beta());
    for (int i = 0; i < n; ++i) q = q.derivative() - series_mul(w, q);
    return q.truncated(order);
  }

  if (family.beta.is_symbolic())
    throw PreconditionError("numeric jets need a numeric beta");
  const double lb = family.beta.log();
  TruncatedSeries<double> q = psi.numeric_series();
  const TruncatedSeries<double> w = phi2.numeric_series().derivative().scaled(lb);
  for (int i = 0; i < n; ++i) q = q.derivative() - series_mul(w, q);
  return q.truncated(order);
}

Poly KernelCache::get(const FamilySpec& family, int n) {
  if (n < 0) throw PreconditionError("kernel index must be nonnegative");
  std::lock_guard lock(mutex_);
  auto& q = ladders_[family.digest()];
  if (q.empty()) {
    const FamilyPolys polys = family_polys(family);
    q.push_back(polys.psi);
  }
  if (static_cast<int>(q.size()) <= n) {
    const Poly phi2_prime = family_polys(family).phi2.derivative();
    while (static_cast<int>(q.size()) <= n) q.push_back(ladder_step(q.back(), phi2_prime));
  }
  return q[static_cast<std::size_t>(n)];
}

std::size_t KernelCache::size() const {
  std::lock_guard lock(mutex_);
  return ladders_.size();
}

}  // namespace rodrigues
