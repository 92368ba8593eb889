#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rodrigues/rational.hpp"
#include "rodrigues/sym_coeff.hpp"

namespace rodrigues {

/// Dense univariate polynomial over SymCoeff, lowest degree first.
///
/// The variable is called x throughout, but the same type carries
/// polynomials in y for the bilateral machinery.
class Poly {
 public:
  static constexpr int zero_degree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(SymCoeff c);  // NOLINT(google-explicit-constructor)
  Poly(Rational c) : Poly(SymCoeff(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(SymCoeff(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<SymCoeff> coeffs);

  static Poly x();
  static Poly monomial(SymCoeff c, unsigned power);
  static Poly from_rationals(std::span<const Rational> coeffs);

  // zero_degree for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const SymCoeff> coeffs() const { return coeffs_; }
  const SymCoeff& coeff(std::size_t power) const;
  const SymCoeff& leading() const;

  bool contains(Symbol s) const;

  Poly derivative() const;
  Poly derivative(unsigned order) const;

  SymCoeff evaluate(const Rational& x0) const;
  double evaluate(double x0, const SymbolValues& values) const;
  Poly substitute(Symbol s, const Rational& value) const;
  // p(a * x)
  Poly scale_argument(const Rational& a) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const SymCoeff& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const SymCoeff& c) { return a *= c; }
  friend Poly operator*(const SymCoeff& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<SymCoeff> coeffs_;
};

inline Poly poly_derivative(const Poly& p) { return p.derivative(); }

}  // namespace rodrigues
