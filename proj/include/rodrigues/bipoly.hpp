#pragma once

#include <string>
#include <vector>

#include "rodrigues/poly.hpp"

namespace rodrigues {

/// Polynomial in two variables x and y over SymCoeff, stored as
/// sum_j y^j * P_j(x).
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(SymCoeff c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(SymCoeff(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly in_x(const Poly& p);
  static BiPoly in_y(const Poly& p);

  bool is_zero() const { return by_y_.empty(); }
  // Coefficient of y^j, a polynomial in x.
  const Poly& y_coeff(std::size_t j) const;
  std::size_t y_terms() const { return by_y_.size(); }

  // Exchanges the roles of x and y.
  BiPoly swapped() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const SymCoeff& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const SymCoeff& c) { return a *= c; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str() const;

 private:
  void trim();

  std::vector<Poly> by_y_;
};

}  // namespace rodrigues
