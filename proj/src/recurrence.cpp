#include "rodrigues/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rodrigues/errors.hpp"
#include "rodrigues/kernel.hpp"

namespace rodrigues {

const char* to_string(RecurrenceId id) {
  switch (id) {
    case RecurrenceId::aa9: return "aa9";
    case RecurrenceId::aa10: return "aa10";
    case RecurrenceId::cor21: return "cor21";
    case RecurrenceId::thm23: return "thm23";
    case RecurrenceId::aa11: return "aa11";
    case RecurrenceId::cor22: return "cor22";
  }
  return "?";
}

std::optional<RecurrenceId> parse_recurrence_id(std::string_view name) {
  for (RecurrenceId id : all_recurrences)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

namespace {

// Derivatives and products shared by all residuals at one index n.
class ResidualContext {
 public:
  ResidualContext(const FamilyPolys& polys, std::span<const Poly> kernels, int n,
                  const BinomialTable& binom)
      : polys_(polys), q_(kernels), n_(n), binom_(binom) {
    if (n < 0) throw PreconditionError("recurrence index must be nonnegative");
    if (kernels.size() < static_cast<std::size_t>(n) + 2)
      throw PreconditionError("need kernels q_0..q_{n+1}");
    psi_d_.push_back(polys.psi);
    for (int p = 0; p <= n; ++p) psi_d_.push_back(psi_d_.back().derivative());
    Poly d = polys.phi2.derivative();
    for (int k = 0; k <= n; ++k) {
      phi2_d_.push_back(d);
      d = d.derivative();
    }
    la_phi1_prime_ = polys.phi1.derivative() * log_alpha();
  }

  const Poly& q(int m) const { return q_[static_cast<std::size_t>(m)]; }
  Poly dq(int m) const { return reduced_derivative(q(m), polys_); }
  // psi^{(p)}
  const Poly& psi_d(int p) const { return psi_d_[static_cast<std::size_t>(p)]; }
  // phi2^{(k+1)}
  const Poly& phi2_d(int k) const { return phi2_d_[static_cast<std::size_t>(k)]; }
  const Poly& la_phi1_prime() const { return la_phi1_prime_; }
  SymCoeff c(int n, int k) const { return SymCoeff(binom_(n, k)); }
  int n() const { return n_; }

  // sum_{k=0}^{n} sum_{p=0}^{n-k} C(n,k) C(n-k,p) term(m = n-p-k, p, k)
  // psi^{(p)} phi2^{(k+1)}, skipping vanishing derivatives.
  template <class Term>
  Poly double_sum(Term term) const {
    Poly acc;
    for (int k = 0; k <= n_; ++k) {
      if (phi2_d(k).is_zero()) continue;
      for (int p = 0; p <= n_ - k; ++p) {
        if (psi_d(p).is_zero()) continue;
        const SymCoeff weight = c(n_, k) * c(n_ - k, p);
        acc += (term(n_ - p - k) * (psi_d(p) * phi2_d(k))) * weight;
      }
    }
    return acc;
  }

 private:
  const FamilyPolys& polys_;
  std::span<const Poly> q_;
  int n_;
  const BinomialTable& binom_;
  std::vector<Poly> psi_d_;
  std::vector<Poly> phi2_d_;
  Poly la_phi1_prime_;
};

Poly aa9_lhs(const ResidualContext& ctx) {
  const int n = ctx.n();
  Poly acc;
  for (int p = 0; p <= n; ++p) {
    const Poly term = ctx.q(n - p + 1) * ctx.psi_d(p) - ctx.q(n - p) * ctx.psi_d(p + 1);
    acc += term * ctx.c(n, p);
  }
  return acc;
}

Poly aa10_lhs(const ResidualContext& ctx) {
  const int n = ctx.n();
  Poly acc;
  for (int p = 0; p <= n; ++p) {
    const Poly& qm = ctx.q(n - p);
    const Poly term = (ctx.dq(n - p) - ctx.la_phi1_prime() * qm) * ctx.psi_d(p) - qm * ctx.psi_d(p + 1);
    acc += term * ctx.c(n, p);
  }
  return acc;
}

// -Lb sum sum C C q_{n-p-k} psi^{(p)} phi2^{(k+1)}
Poly aa9_rhs(const ResidualContext& ctx) {
  return ctx.double_sum([&](int m) { return ctx.q(m); }) * (-log_beta());
}

Poly aa11(const ResidualContext& ctx) {
  const int n = ctx.n();
  Poly single;
  for (int p = 0; p <= n; ++p) {
    const Poly& next = ctx.q(n - p + 1);
    const Poly term = ctx.la_phi1_prime() * next * ctx.psi_d(p) + next * ctx.psi_d(p + 1) -
                      ctx.dq(n - p) * ctx.psi_d(p + 1);
    single += term * ctx.c(n, p);
  }
  const Poly mixed = ctx.double_sum([&](int m) { return ctx.dq(m) - ctx.q(m + 1); });
  return single + mixed * log_beta();
}

Poly cor22(const ResidualContext& ctx) {
  const int n = ctx.n();
  Poly sum;
  for (int k = 0; k <= n; ++k) {
    if (ctx.phi2_d(k).is_zero()) continue;
    sum += (ctx.phi2_d(k) * ctx.q(n - k)) * ctx.c(n, k);
  }
  return ctx.q(n + 1) + sum * log_beta();
}

}  // namespace

Poly residual_from_kernels(RecurrenceId id, const FamilyPolys& polys, std::span<const Poly> kernels,
                           int n, const BinomialTable& binom) {
  if (id == RecurrenceId::cor22 && polys.psi != Poly(1))
    throw PreconditionError("cor22 requires psi = 1");
  const ResidualContext ctx(polys, kernels, n, binom);
  switch (id) {
    case RecurrenceId::aa9: return aa9_lhs(ctx) - aa9_rhs(ctx);
    case RecurrenceId::aa10: return aa10_lhs(ctx) - aa9_rhs(ctx);
    case RecurrenceId::cor21: return aa9_lhs(ctx) - aa10_lhs(ctx);
    case RecurrenceId::thm23: return ctx.dq(n) - ctx.q(n + 1) - ctx.la_phi1_prime() * ctx.q(n);
    case RecurrenceId::aa11: return aa11(ctx);
    case RecurrenceId::cor22: return cor22(ctx);
  }
  throw PreconditionError("unknown recurrence");
}

Poly residual(RecurrenceId id, const FamilySpec& family, int n) {
  const FamilyPolys polys = family_polys(family);
  const auto kernels = reduced_kernels(polys, n + 1);
  return residual_from_kernels(id, polys, kernels, n);
}

std::vector<VerificationReport> sweep(const FamilySpec& family, int n_max) {
  return sweep(family, n_max, all_recurrences);
}

std::vector<VerificationReport> sweep(const FamilySpec& family, int n_max,
                                      std::span<const RecurrenceId> ids, const BinomialTable& binom) {
  const FamilyPolys polys = family_polys(family);
  const auto kernels = reduced_kernels(polys, n_max + 1);
  const bool psi_one = polys.psi == Poly(1);

  std::vector<VerificationReport> reports;
  for (RecurrenceId id : ids) {
    VerificationReport report;
    report.identity = to_string(id);
    report.order = n_max;
    if (id == RecurrenceId::cor22 && !psi_one) {
      report.status = Status::skipped;
      report.notes.emplace_back("requires psi = 1");
      reports.push_back(std::move(report));
      continue;
    }
    for (int n = 0; n <= n_max && report.status == Status::verified; ++n) {
      const Poly r = residual_from_kernels(id, polys, kernels, n, binom);
      if (r.is_zero()) continue;
      FirstFailure failure;
      failure.n = n;
      for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        if (r.coeff(i).is_zero()) continue;
        failure.x_power = static_cast<int>(i);
        failure.coefficient = r.coeff(i);
        break;
      }
      report.status = Status::failed;
      report.first_failure = std::move(failure);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

namespace {

TruncatedSeries<double> to_numeric(const KernelJet& jet, const SymbolValues& values) {
  if (const auto* d = std::get_if<TruncatedSeries<double>>(&jet)) return *d;
  const auto& s = std::get<TruncatedSeries<SymCoeff>>(jet);
  TruncatedSeries<double> out(SeriesVar::t, s.order());
  for (int i = 0; i <= s.order(); ++i) out[i] = s[i].evaluate(values);
  return out;
}

}  // namespace

JetResidual thm23_jet_residual(const FamilySpec& family, int n, const Rational& x0, int order) {
  const KernelJet qn = theta_jet(family, n, x0, order + 1);
  const KernelJet qn1 = theta_jet(family, n + 1, x0, order);
  const Jet phi1 = jet_at(family.phi1, x0, order + 1);
  const Jet phi2 = jet_at(family.phi2, x0, order + 1);

  const bool exact = phi1.exact() && phi2.exact() &&
                     std::holds_alternative<TruncatedSeries<SymCoeff>>(qn) &&
                     std::holds_alternative<TruncatedSeries<SymCoeff>>(qn1);
  if (exact) {
    const auto lift = [](const TruncatedSeries<Rational>& s, const SymCoeff& factor) {
      TruncatedSeries<SymCoeff> out(SeriesVar::t, s.order());
      for (int i = 0; i <= s.order(); ++i) out[i] = SymCoeff(s[i]) * factor;
      return out;
    };
    const auto& q = std::get<TruncatedSeries<SymCoeff>>(qn);
    const auto& next = std::get<TruncatedSeries<SymCoeff>>(qn1);
    const auto w1 = lift(phi1.exact_series(), log_alpha()).derivative();
    const auto w2 = lift(phi2.exact_series(), log_beta()).derivative();
    const auto dq = q.derivative() + series_mul(w1 - w2, q);
    const auto r = dq - next - series_mul(w1, q);
    return JetResidual{true, r.is_zero() ? 0.0 : std::numeric_limits<double>::infinity()};
  }

  if (family.alpha.is_symbolic() || family.beta.is_symbolic())
    throw PreconditionError("numeric jets need numeric alpha and beta");
  const SymbolValues values{family.alpha.log(), family.beta.log(), 0.0};
  const auto q = to_numeric(qn, values);
  const auto next = to_numeric(qn1, values);
  const auto w1 = phi1.numeric_series().derivative().scaled(values.log_alpha);
  const auto w2 = phi2.numeric_series().derivative().scaled(values.log_beta);
  const auto dq = q.derivative() + series_mul(w1 - w2, q);
  const auto w1q = series_mul(w1, q);
  const auto r = dq - next - w1q;
  double max_abs = 0.0, scale = 1.0;
  for (int i = 0; i <= r.order(); ++i) {
    max_abs = std::max(max_abs, std::abs(r[i]));
    scale = std::max({scale, std::abs(dq[i]), std::abs(next[i]), std::abs(w1q[i])});
  }
  return JetResidual{false, max_abs, scale};
}

VerificationReport verify_thm23_jets(const FamilySpec& family, int n_max, const Rational& x0, int order,
                                     double tol) {
  VerificationReport report;
  report.identity = "thm23_jet";
  report.order = order;
  report.notes.push_back("x0 = " + x0.str());
  bool numeric = false;
  for (int n = 0; n <= n_max; ++n) {
    const JetResidual r = thm23_jet_residual(family, n, x0, order);
    numeric = numeric || !r.exact;
    if (r.max_abs <= (r.exact ? 0.0 : tol * r.scale)) continue;
    FirstFailure f;
    f.n = n;
    report.status = Status::failed;
    report.first_failure = f;
    break;
  }
  report.notes.emplace_back(numeric ? "numeric jets" : "exact jets");
  return report;
}

}  // namespace rodrigues
