#pragma once

#include <span>

#include "rodrigues/analytic.hpp"
#include "rodrigues/report.hpp"
#include "rodrigues/series.hpp"

namespace rodrigues {

// sum_{n<=N} q_n(x) t^n / n!
TruncatedSeries<Poly> genfun_lhs(const FamilySpec& family, int order);
TruncatedSeries<Poly> genfun_lhs_from_kernels(std::span<const Poly> kernels, int order);

// psi(x+t) exp(-Lb (phi2(x+t) - phi2(x))) to order N.
TruncatedSeries<Poly> genfun_rhs(const FamilySpec& family, int order);
TruncatedSeries<Poly> genfun_rhs(const FamilyPolys& polys, int order);

VerificationReport verify_genfun(const FamilySpec& family, int order);
// Same check with caller-supplied kernels q_0..q_N (harness self-tests).
VerificationReport verify_genfun_kernels(const FamilySpec& family, std::span<const Poly> kernels,
                                         int order);

}  // namespace rodrigues
