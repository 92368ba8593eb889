#include "rodrigues/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rodrigues/errors.hpp"

namespace rodrigues {

AnalyticFunction AnalyticFunction::polynomial(std::vector<Rational> coeffs) {
  return AnalyticFunction(PolynomialFn{std::move(coeffs)});
}

AnalyticFunction AnalyticFunction::builtin(BuiltinKind kind, Rational scale) {
  return AnalyticFunction(BuiltinFn{kind, std::move(scale)});
}

AnalyticFunction AnalyticFunction::taylor(Rational at, std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw InputError("taylor table needs at least one coefficient");
  return AnalyticFunction(TaylorTableFn{std::move(at), std::move(coeffs)});
}

bool AnalyticFunction::is_identically_zero() const {
  const auto all_zero = [](const std::vector<Rational>& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  if (const auto* p = std::get_if<PolynomialFn>(&value_)) return all_zero(p->coeffs);
  if (const auto* t = std::get_if<TaylorTableFn>(&value_)) return all_zero(t->coeffs);
  const auto& b = std::get<BuiltinFn>(value_);
  return b.kind == BuiltinKind::sin && b.scale.is_zero();
}

const TruncatedSeries<Rational>& Jet::exact_series() const {
  if (!exact_) throw PreconditionError("jet is numeric, not exact");
  return *exact_;
}

TruncatedSeries<double> Jet::numeric_series() const {
  if (numeric_) return *numeric_;
  TruncatedSeries<double> out(SeriesVar::t, exact_->order());
  for (int i = 0; i <= exact_->order(); ++i) out[i] = (*exact_)[i].to_double();
  return out;
}

namespace {

// (d/dx)^j of sin or cos at phase s*x0, divided by s^j: a quarter-turn shift.
double trig_derivative(BuiltinKind kind, double phase, int j) {
  const double shift = static_cast<double>(j) * std::numbers::pi / 2.0;
  return kind == BuiltinKind::sin ? std::sin(phase + shift) : std::cos(phase + shift);
}

Jet builtin_jet(const BuiltinFn& f, const Rational& x0, int order) {
  if (x0.is_zero()) {
    TruncatedSeries<Rational> s(SeriesVar::t, order);
    Rational power(1);
    for (int j = 0; j <= order; ++j) {
      if (j > 0) power *= f.scale / Rational(j);
      switch (f.kind) {
        case BuiltinKind::exp: s[j] = power; break;
        case BuiltinKind::sin: s[j] = (j % 2 == 0) ? Rational(0) : (j % 4 == 1 ? power : -power); break;
        case BuiltinKind::cos: s[j] = (j % 2 == 1) ? Rational(0) : (j % 4 == 0 ? power : -power); break;
      }
    }
    return Jet(std::move(s));
  }
  const double scale = f.scale.to_double();
  const double phase = scale * x0.to_double();
  TruncatedSeries<double> s(SeriesVar::t, order);
  double power = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) power *= scale / static_cast<double>(j);
    s[j] = f.kind == BuiltinKind::exp ? std::exp(phase) * power
                                      : trig_derivative(f.kind, phase, j) * power;
  }
  return Jet(std::move(s));
}

}  // namespace

Jet jet_at(const AnalyticFunction& f, const Rational& x0, int order) {
  if (order < 0) throw PreconditionError("jet order must be nonnegative");
  if (const auto* p = std::get_if<PolynomialFn>(&f.value())) {
    TruncatedSeries<Rational> s(SeriesVar::t, order);
    const int deg = static_cast<int>(p->coeffs.size()) - 1;
    for (int j = 0; j <= std::min(order, deg); ++j) {
      Rational acc(0);
      Rational power(1);
      for (int i = j; i <= deg; ++i) {
        acc += binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * p->coeffs[i] * power;
        power *= x0;
      }
      s[j] = acc;
    }
    return Jet(std::move(s));
  }
  if (const auto* t = std::get_if<TaylorTableFn>(&f.value())) {
    if (t->at != x0)
      throw PreconditionError("taylor table is expanded at " + t->at.str() +
                              "; exact jet unavailable at " + x0.str());
    if (order > t->declared_order())
      throw PreconditionError("jet order " + std::to_string(order) + " exceeds the declared order " +
                              std::to_string(t->declared_order()));
    TruncatedSeries<Rational> s(SeriesVar::t, order);
    for (int j = 0; j <= order; ++j) s[j] = t->coeffs[j];
    return Jet(std::move(s));
  }
  return builtin_jet(std::get<BuiltinFn>(f.value()), x0, order);
}

Poly as_poly(const AnalyticFunction& f) {
  const auto* p = std::get_if<PolynomialFn>(&f.value());
  if (!p) throw PreconditionError("not polynomial");
  return Poly::from_rationals(p->coeffs);
}

LogBase LogBase::numeric(double value) {
  if (!std::isfinite(value) || value <= 0.0 || value == 1.0)
    throw InputError("base must lie in (0, inf) \\ {1}");
  LogBase b;
  b.value_ = value;
  return b;
}

LogBase LogBase::euler() { return numeric(std::numbers::e); }

double LogBase::value() const {
  if (!value_) throw PreconditionError("base is symbolic");
  return *value_;
}

double LogBase::log() const { return std::log(value()); }

std::optional<Rational> LogBase::exact_log() const {
  if (!value_) return std::nullopt;
  if (std::abs(*value_ - std::numbers::e) <= 4.0 * std::numeric_limits<double>::epsilon() * std::numbers::e)
    return Rational(1);
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (psi.is_identically_zero()) throw InputError("psi is identically zero");
}

bool FamilySpec::is_polynomial() const {
  return phi1.is_polynomial() && phi2.is_polynomial() && psi.is_polynomial();
}

bool FamilySpec::psi_is_one() const {
  if (!psi.is_polynomial()) return false;
  return as_poly(psi) == Poly(1);
}

namespace {

void write_rationals(std::ostringstream& os, const std::vector<Rational>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
}

void write_function(std::ostringstream& os, const AnalyticFunction& f) {
  if (f.is_polynomial()) {
    // Trailing zeros do not change the function.
    Poly p = as_poly(f);
    os << "poly" << p.str();
  } else if (const auto* b = std::get_if<BuiltinFn>(&f.value())) {
    os << "builtin" << static_cast<int>(b->kind) << ":" << b->scale;
  } else {
    const auto& t = std::get<TaylorTableFn>(f.value());
    os << "taylor@" << t.at;
    write_rationals(os, t.coeffs);
  }
}

void write_base(std::ostringstream& os, const LogBase& b) {
  if (b.is_symbolic()) {
    os << "sym";
  } else {
    os.precision(17);
    os << b.value();
  }
}

}  // namespace

std::string FamilySpec::digest() const {
  std::ostringstream os;
  write_function(os, phi1);
  os << "|";
  write_function(os, phi2);
  os << "|";
  write_function(os, psi);
  os << "|";
  write_base(os, alpha);
  os << "|";
  write_base(os, beta);
  return os.str();
}

FamilyPolys family_polys(const FamilySpec& family) {
  if (!family.is_polynomial())
    throw PreconditionError("not polynomial: this operation needs polynomial phi1, phi2 and psi");
  return FamilyPolys{as_poly(family.phi1), as_poly(family.phi2), as_poly(family.psi)};
}

Poly specialize_logs(const Poly& p, const FamilySpec& family) {
  Poly out = p;
  if (const auto la = family.alpha.exact_log()) out = out.substitute(Symbol::log_alpha, *la);
  if (const auto lb = family.beta.exact_log()) out = out.substitute(Symbol::log_beta, *lb);
  return out;
}

}  // namespace rodrigues
