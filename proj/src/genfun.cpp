#include "rodrigues/genfun.hpp"

#include "rodrigues/errors.hpp"
#include "rodrigues/kernel.hpp"

namespace rodrigues {

TruncatedSeries<Poly> genfun_lhs_from_kernels(std::span<const Poly> kernels, int order) {
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  if (kernels.size() < static_cast<std::size_t>(order) + 1)
    throw PreconditionError("need kernels q_0..q_N for the generating function");
  TruncatedSeries<Poly> out(SeriesVar::t, order);
  Rational inv_fact(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Rational(n);
    out[n] = kernels[static_cast<std::size_t>(n)] * SymCoeff(inv_fact);
  }
  return out;
}

TruncatedSeries<Poly> genfun_lhs(const FamilySpec& family, int order) {
  const auto kernels = reduced_kernels(family, order);
  return genfun_lhs_from_kernels(kernels, order);
}

TruncatedSeries<Poly> genfun_rhs(const FamilyPolys& polys, int order) {
  const TruncatedSeries<Poly> psi_shift = poly_taylor_shift(polys.psi, order);
  TruncatedSeries<Poly> exponent = poly_taylor_shift(polys.phi2, order);
  exponent[0] = Poly();
  const SymCoeff minus_lb = -log_beta();
  for (int j = 1; j <= order; ++j) exponent[j] *= minus_lb;
  return series_mul(psi_shift, series_exp(exponent));
}

TruncatedSeries<Poly> genfun_rhs(const FamilySpec& family, int order) {
  return genfun_rhs(family_polys(family), order);
}

namespace {

VerificationReport compare(const TruncatedSeries<Poly>& lhs, const TruncatedSeries<Poly>& rhs,
                           int order) {
  VerificationReport report;
  report.identity = "genfun";
  report.order = order;
  const TruncatedSeries<Poly> residual = lhs - rhs;
  for (int j = 0; j <= residual.order(); ++j) {
    const Poly& r = residual[j];
    if (r.is_zero()) continue;
    FirstFailure failure;
    failure.t_order = j;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
      if (r.coeff(i).is_zero()) continue;
      failure.x_power = static_cast<int>(i);
      failure.coefficient = r.coeff(i);
      break;
    }
    report.status = Status::failed;
    report.first_failure = std::move(failure);
    break;
  }
  return report;
}

}  // namespace

VerificationReport verify_genfun(const FamilySpec& family, int order) {
  const FamilyPolys polys = family_polys(family);
  const auto kernels = reduced_kernels(polys, order);
  return compare(genfun_lhs_from_kernels(kernels, order), genfun_rhs(polys, order), order);
}

VerificationReport verify_genfun_kernels(const FamilySpec& family, std::span<const Poly> kernels,
                                         int order) {
  return compare(genfun_lhs_from_kernels(kernels, order), genfun_rhs(family, order), order);
}

}  // namespace rodrigues
