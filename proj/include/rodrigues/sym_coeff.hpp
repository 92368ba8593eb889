#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rodrigues/rational.hpp"

namespace rodrigues {

// The three commuting symbols of the coefficient ring Q[La, Lb, n].
// La and Lb stand for ln(alpha) and ln(beta); `index` is the symbolic
// family index used by the ODE synthesizer.
enum class Symbol { log_alpha, log_beta, index };

struct Monomial {
  std::uint16_t la = 0;
  std::uint16_t lb = 0;
  std::uint16_t n = 0;

  unsigned exponent(Symbol s) const;
  bool is_one() const { return la == 0 && lb == 0 && n == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Numeric values to plug in for the symbols when evaluating in double.
struct SymbolValues {
  double log_alpha = 0.0;
  double log_beta = 0.0;
  double index = 0.0;
};

/// Sparse polynomial in (La, Lb, n) with rational coefficients.
///
/// Terms are kept sorted by monomial and never store a zero coefficient,
/// so structural equality is mathematical equality.
class SymCoeff {
 public:
  using Term = std::pair<Monomial, Rational>;

  SymCoeff() = default;
  SymCoeff(Rational c);  // NOLINT(google-explicit-constructor)
  SymCoeff(long c) : SymCoeff(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static SymCoeff symbol(Symbol s, unsigned power = 1);
  static SymCoeff term(Monomial m, Rational c);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of the constant monomial (zero if absent).
  Rational constant_term() const;
  // Set when the element is a plain rational.
  std::optional<Rational> as_rational() const;

  unsigned degree_in(Symbol s) const;
  bool contains(Symbol s) const { return degree_in(s) > 0; }

  SymCoeff substitute(Symbol s, const Rational& value) const;
  double evaluate(const SymbolValues& values) const;

  SymCoeff operator-() const;
  SymCoeff& operator+=(const SymCoeff& o);
  SymCoeff& operator-=(const SymCoeff& o);
  SymCoeff& operator*=(const SymCoeff& o);
  SymCoeff& operator*=(const Rational& r);

  friend SymCoeff operator+(SymCoeff a, const SymCoeff& b) { return a += b; }
  friend SymCoeff operator-(SymCoeff a, const SymCoeff& b) { return a -= b; }
  friend SymCoeff operator*(const SymCoeff& a, const SymCoeff& b);
  friend SymCoeff operator*(SymCoeff a, const Rational& r) { return a *= r; }
  friend SymCoeff operator*(const Rational& r, SymCoeff a) { return a *= r; }

  friend bool operator==(const SymCoeff&, const SymCoeff&) = default;

  std::string str() const;

 private:
  // Merges `other` scaled by `sign` (+1 or -1) into this element.
  void accumulate(const SymCoeff& other, int sign);

  std::vector<Term> terms_;
};

inline SymCoeff log_alpha() { return SymCoeff::symbol(Symbol::log_alpha); }
inline SymCoeff log_beta() { return SymCoeff::symbol(Symbol::log_beta); }
inline SymCoeff index_symbol() { return SymCoeff::symbol(Symbol::index); }

}  // namespace rodrigues
