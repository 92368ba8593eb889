#include "rodrigues/poly.hpp"

#include <sstream>

#include "rodrigues/errors.hpp"

namespace rodrigues {

namespace {
const SymCoeff kZero{};
}

Poly::Poly(SymCoeff c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<SymCoeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(SymCoeff(1), 1); }

Poly Poly::monomial(SymCoeff c, unsigned power) {
  if (c.is_zero()) return {};
  std::vector<SymCoeff> v(power + 1);
  v[power] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::from_rationals(std::span<const Rational> coeffs) {
  std::vector<SymCoeff> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Poly::degree() const {
  return coeffs_.empty() ? zero_degree : static_cast<int>(coeffs_.size()) - 1;
}

const SymCoeff& Poly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const SymCoeff& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

bool Poly::contains(Symbol s) const {
  for (const auto& c : coeffs_)
    if (c.contains(s)) return true;
  return false;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<SymCoeff> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::derivative(unsigned order) const {
  Poly out = *this;
  for (unsigned i = 0; i < order && !out.is_zero(); ++i) out = out.derivative();
  return out;
}

SymCoeff Poly::evaluate(const Rational& x0) const {
  SymCoeff acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

double Poly::evaluate(double x0, const SymbolValues& values) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + it->evaluate(values);
  return acc;
}

Poly Poly::substitute(Symbol s, const Rational& value) const {
  std::vector<SymCoeff> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.substitute(s, value));
  return Poly(std::move(v));
}

Poly Poly::scale_argument(const Rational& a) const {
  std::vector<SymCoeff> v = coeffs_;
  Rational power(1);
  for (auto& c : v) {
    c *= power;
    power *= a;
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const SymCoeff& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<SymCoeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(v));
}

std::string Poly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const SymCoeff& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool single = c.terms().size() == 1;
    const bool negative = single && c.terms().front().second.sign() < 0;
    const SymCoeff shown = negative ? -c : c;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool plain_one = shown == SymCoeff(1);
    if (i == 0 || !plain_one) {
      if (!single) os << "(" << shown.str() << ")";
      else os << shown.str();
    }
    if (i > 0) {
      if (!plain_one) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace rodrigues
