#include "rodrigues/bilateral.hpp"

#include <algorithm>
#include <limits>

#include "rodrigues/errors.hpp"
#include "rodrigues/genfun.hpp"
#include "rodrigues/kernel.hpp"

namespace rodrigues {

void BilateralSpec::validate() const {
  if (mu < 0) throw InputError("mu must be a nonnegative integer");
  if (nu < 1) throw InputError("nu must be a positive integer");
  if (p < 1) throw InputError("p must be a positive integer");
  if (const auto* list = std::get_if<std::vector<Rational>>(&a)) {
    if (list->empty()) throw InputError("coefficient list is empty");
    for (const auto& c : *list)
      if (c.is_zero()) throw InputError("coefficients a_k must be nonzero");
  }
  if (const auto* theta = std::get_if<ThetaOmega>(&omega)) theta->family.validate();
}

Rational BilateralSpec::coefficient(int k) const {
  if (k < 0) throw PreconditionError("coefficient index must be nonnegative");
  if (std::holds_alternative<InverseFactorial>(a)) return factorial(static_cast<unsigned>(k)).inverse();
  const auto& list = std::get<std::vector<Rational>>(a);
  if (static_cast<std::size_t>(k) >= list.size())
    throw PreconditionError("coefficient list has " + std::to_string(list.size()) +
                            " entries; a_" + std::to_string(k) + " requested");
  return list[static_cast<std::size_t>(k)];
}

TruncatedSeries<Poly> apostol_bernoulli_generator(unsigned order, const Rational& lambda,
                                                  int series_order) {
  if (series_order < 0) throw PreconditionError("series order must be nonnegative");
  // t / (lambda e^t - 1) as a rational series.
  TruncatedSeries<Rational> base(SeriesVar::t, series_order);
  if (lambda.is_one()) {
    // Cancel the simple zero: (e^t - 1)/t = sum t^j / (j+1)!.
    TruncatedSeries<Rational> quotient(SeriesVar::t, series_order);
    for (int j = 0; j <= series_order; ++j) quotient[j] = factorial(static_cast<unsigned>(j + 1)).inverse();
    base = series_inverse(quotient);
  } else {
    TruncatedSeries<Rational> denom(SeriesVar::t, series_order);
    for (int j = 0; j <= series_order; ++j) denom[j] = lambda * factorial(static_cast<unsigned>(j)).inverse();
    denom[0] -= Rational(1);
    const auto inv = series_inverse(denom);
    for (int j = 1; j <= series_order; ++j) base[j] = inv[j - 1];
  }
  const TruncatedSeries<Rational> powered = series_pow(base, order);

  TruncatedSeries<Poly> out(SeriesVar::t, series_order);
  for (int n = 0; n <= series_order; ++n) {
    Poly acc;
    for (int j = 0; j <= n; ++j) {
      const Rational& c = powered[n - j];
      if (c.is_zero()) continue;
      acc += Poly::monomial(SymCoeff(c * factorial(static_cast<unsigned>(j)).inverse()),
                            static_cast<unsigned>(j));
    }
    out[n] = std::move(acc);
  }
  return out;
}

Poly apostol_bernoulli(int n, unsigned order, const Rational& lambda) {
  if (n < 0) throw PreconditionError("index must be nonnegative");
  const auto gen = apostol_bernoulli_generator(order, lambda, n);
  return gen[n] * SymCoeff(factorial(static_cast<unsigned>(n)));
}

namespace {

// Omega_0 .. Omega_{max_index}.
std::vector<Poly> omega_table(const OmegaFamily& omega, int max_index) {
  if (const auto* ab = std::get_if<ApostolBernoulliOmega>(&omega)) {
    const auto gen = apostol_bernoulli_generator(ab->order, ab->lambda, max_index);
    std::vector<Poly> out;
    for (int k = 0; k <= max_index; ++k)
      out.push_back(gen[k] * SymCoeff(factorial(static_cast<unsigned>(k))));
    return out;
  }
  if (const auto* theta = std::get_if<ThetaOmega>(&omega)) return reduced_kernels(theta->family, max_index);
  const auto& table = std::get<TableOmega>(omega).values;
  if (static_cast<int>(table.size()) <= max_index)
    throw PreconditionError("omega table has " + std::to_string(table.size()) + " entries; index " +
                            std::to_string(max_index) + " requested");
  return {table.begin(), table.begin() + max_index + 1};
}

struct Assembly {
  std::vector<Poly> kernels;  // q_0 ..
  std::vector<Poly> omega;    // Omega_0 .. Omega_{mu + nu K}
};

// Terms k = 0..min(floor(n/p), k_max) of Phi_n.
std::vector<BiPoly> phi_terms(const BilateralSpec& spec, const Assembly& data, int n,
                              int k_max = std::numeric_limits<int>::max()) {
  std::vector<BiPoly> out;
  for (int k = 0; k <= std::min(n / spec.p, k_max); ++k) {
    const int m = n - spec.p * k;
    const Rational weight = spec.coefficient(k) * factorial(static_cast<unsigned>(m)).inverse();
    const Poly& omega = data.omega[static_cast<std::size_t>(spec.mu + spec.nu * k)];
    out.push_back(BiPoly::in_x(data.kernels[static_cast<std::size_t>(m)]) * BiPoly::in_y(omega) *
                  SymCoeff(weight));
  }
  return out;
}

}  // namespace

Poly omega_value(const OmegaFamily& omega, int k) {
  if (k < 0) throw PreconditionError("omega index must be nonnegative");
  return omega_table(omega, k).back();
}

TruncatedSeries<Poly> lambda_series(const BilateralSpec& spec, int order) {
  spec.validate();
  const auto omega = omega_table(spec.omega, spec.mu + spec.nu * order);
  TruncatedSeries<Poly> out(SeriesVar::eta, order);
  for (int k = 0; k <= order; ++k)
    out[k] = omega[static_cast<std::size_t>(spec.mu + spec.nu * k)] * SymCoeff(spec.coefficient(k));
  return out;
}

std::optional<TruncatedSeries<Poly>> lambda_closed_form(const BilateralSpec& spec, int order) {
  if (!std::holds_alternative<InverseFactorial>(spec.a) || spec.mu != 0 || spec.nu != 1)
    return std::nullopt;
  TruncatedSeries<Poly> source(SeriesVar::t, order);
  if (const auto* ab = std::get_if<ApostolBernoulliOmega>(&spec.omega)) {
    source = apostol_bernoulli_generator(ab->order, ab->lambda, order);
  } else if (const auto* theta = std::get_if<ThetaOmega>(&spec.omega)) {
    source = genfun_rhs(theta->family, order);
  } else {
    return std::nullopt;
  }
  TruncatedSeries<Poly> out(SeriesVar::eta, order);
  for (int k = 0; k <= order; ++k) out[k] = source[k];
  return out;
}

std::vector<BiPoly> phi_poly(const BilateralSpec& spec, const FamilySpec& family, int n) {
  spec.validate();
  if (n < 0) throw PreconditionError("index must be nonnegative");
  const Assembly data{reduced_kernels(family, n), omega_table(spec.omega, spec.mu + spec.nu * (n / spec.p))};
  return phi_terms(spec, data, n);
}

TruncatedSeries<BiPoly> bilateral_lhs(const BilateralSpec& spec, const FamilySpec& family,
                                      int order_t, int order_eta) {
  spec.validate();
  const int n_max = order_t + spec.p * order_eta;
  const Assembly data{reduced_kernels(family, n_max),
                      omega_table(spec.omega, spec.mu + spec.nu * order_eta)};
  TruncatedSeries<BiPoly> out(order_t, order_eta);
  for (int n = 0; n <= n_max; ++n) {
    const auto terms = phi_terms(spec, data, n, order_eta);
    for (int k = 0; k < static_cast<int>(terms.size()); ++k) {
      // zeta = eta / t^p turns the k-th term into t^{n-pk} eta^k.
      const int t_power = n - spec.p * k;
      if (t_power > order_t || k > order_eta) continue;
      out.at(t_power, k) += terms[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

TruncatedSeries<BiPoly> bilateral_rhs(const BilateralSpec& spec, const FamilySpec& family,
                                      int order_t, int order_eta) {
  spec.validate();
  const auto genfun = genfun_rhs(family, order_t);
  auto lambda = lambda_closed_form(spec, order_eta);
  if (!lambda) lambda = lambda_series(spec, order_eta);
  const auto left = lift_t<Poly, BiPoly>(genfun, order_eta, [](const Poly& p) { return BiPoly::in_x(p); });
  const auto right = lift_eta<Poly, BiPoly>(*lambda, order_t, [](const Poly& p) { return BiPoly::in_y(p); });
  return series_mul(left, right);
}

VerificationReport verify_bilateral(const BilateralSpec& spec, const FamilySpec& family, int order_t,
                                    int order_eta) {
  VerificationReport report;
  report.identity = "bilateral";
  report.order = order_t;
  report.notes.push_back(lambda_closed_form(spec, 0) ? "lambda: closed form" : "lambda: direct sum");
  const auto residual = bilateral_lhs(spec, family, order_t, order_eta) -
                        bilateral_rhs(spec, family, order_t, order_eta);
  for (int i = 0; i <= order_t && !report.first_failure; ++i) {
    for (int k = 0; k <= order_eta; ++k) {
      const BiPoly& r = residual.at(i, k);
      if (r.is_zero()) continue;
      FirstFailure failure;
      failure.t_order = i;
      failure.eta_order = k;
      for (std::size_t j = 0; j < r.y_terms() && !failure.coefficient; ++j) {
        const Poly& px = r.y_coeff(j);
        for (std::size_t e = 0; e < px.coeffs().size(); ++e) {
          if (px.coeff(e).is_zero()) continue;
          failure.y_power = static_cast<int>(j);
          failure.x_power = static_cast<int>(e);
          failure.coefficient = px.coeff(e);
          break;
        }
      }
      report.status = Status::failed;
      report.first_failure = std::move(failure);
      break;
    }
  }
  return report;
}

TruncatedSeries<BiPoly> swap_variables(const TruncatedSeries<BiPoly>& s) {
  if (!s.bivariate()) throw PreconditionError("swap_variables requires a bivariate series");
  TruncatedSeries<BiPoly> out(s.order_eta(), s.order_t());
  for (int i = 0; i <= s.order_t(); ++i)
    for (int j = 0; j <= s.order_eta(); ++j) out.at(j, i) = s.at(i, j).swapped();
  return out;
}

}  // namespace rodrigues
