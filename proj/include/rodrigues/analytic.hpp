#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rodrigues/poly.hpp"
#include "rodrigues/rational.hpp"
#include "rodrigues/series.hpp"

namespace rodrigues {

struct PolynomialFn {
  std::vector<Rational> coeffs;  // lowest degree first
};

enum class BuiltinKind { exp, sin, cos };

// f(x) = kind(scale * x)
struct BuiltinFn {
  BuiltinKind kind = BuiltinKind::exp;
  Rational scale{1};
};

// Truncated Taylor data sum_j coeffs[j] (x - at)^j.
struct TaylorTableFn {
  Rational at;
  std::vector<Rational> coeffs;

  int declared_order() const { return static_cast<int>(coeffs.size()) - 1; }
};

class AnalyticFunction {
 public:
  using Variant = std::variant<PolynomialFn, BuiltinFn, TaylorTableFn>;

  AnalyticFunction() : value_(PolynomialFn{}) {}
  AnalyticFunction(Variant v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static AnalyticFunction polynomial(std::vector<Rational> coeffs);
  static AnalyticFunction builtin(BuiltinKind kind, Rational scale = Rational(1));
  static AnalyticFunction taylor(Rational at, std::vector<Rational> coeffs);

  const Variant& value() const { return value_; }
  bool is_polynomial() const { return std::holds_alternative<PolynomialFn>(value_); }
  bool is_identically_zero() const;

 private:
  Variant value_;
};

/// Exact or floating Taylor jet. Builtins away from x0 = 0 fall back to
/// double precision.
class Jet {
 public:
  explicit Jet(TruncatedSeries<Rational> s) : exact_(std::move(s)) {}
  explicit Jet(TruncatedSeries<double> s) : numeric_(std::move(s)) {}

  bool exact() const { return exact_.has_value(); }
  int order() const { return exact_ ? exact_->order() : numeric_->order(); }
  const TruncatedSeries<Rational>& exact_series() const;
  // Converts exact jets on the fly.
  TruncatedSeries<double> numeric_series() const;

 private:
  std::optional<TruncatedSeries<Rational>> exact_;
  std::optional<TruncatedSeries<double>> numeric_;
};

Jet jet_at(const AnalyticFunction& f, const Rational& x0, int order);

// Polynomial variant as a Poly over SymCoeff. Throws PreconditionError
// ("not polynomial") for the other variants.
Poly as_poly(const AnalyticFunction& f);

/// alpha or beta: either kept as a symbol or a numeric base in R+ \ {1}.
class LogBase {
 public:
  LogBase() = default;
  static LogBase symbolic() { return LogBase(); }
  static LogBase numeric(double value);
  // Euler's number, the base of every worked example.
  static LogBase euler();

  bool is_symbolic() const { return !value_.has_value(); }
  double value() const;
  double log() const;
  // ln(value) when it is rational; only the case value == e is recognised.
  std::optional<Rational> exact_log() const;

  friend bool operator==(const LogBase&, const LogBase&) = default;

 private:
  std::optional<double> value_;
};

/// The data (phi1, phi2, psi, alpha, beta) defining one family
/// Theta_n = alpha^{phi1} d^n/dx^n (psi beta^{-phi2}).
struct FamilySpec {
  AnalyticFunction phi1;
  AnalyticFunction phi2;
  AnalyticFunction psi;
  LogBase alpha;
  LogBase beta;

  // Throws InputError on psi == 0 or a bad numeric base.
  void validate() const;
  bool is_polynomial() const;
  bool psi_is_one() const;
  // Stable text key for caches; equal families give equal keys.
  std::string digest() const;
};

// The three polynomials of a polynomial family. Throws PreconditionError
// when any of them is not a Polynomial variant.
struct FamilyPolys {
  Poly phi1;
  Poly phi2;
  Poly psi;
};
FamilyPolys family_polys(const FamilySpec& family);

// Substitutes every exactly known log (alpha or beta equal to e) into p.
Poly specialize_logs(const Poly& p, const FamilySpec& family);

}  // namespace rodrigues
