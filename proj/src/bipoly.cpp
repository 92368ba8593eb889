#include "rodrigues/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace rodrigues {

namespace {
const Poly kZeroPoly{};
}

BiPoly::BiPoly(SymCoeff c) {
  if (!c.is_zero()) by_y_.emplace_back(std::move(c));
}

BiPoly BiPoly::in_x(const Poly& p) {
  BiPoly out;
  if (!p.is_zero()) out.by_y_.push_back(p);
  return out;
}

BiPoly BiPoly::in_y(const Poly& p) {
  BiPoly out;
  out.by_y_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.by_y_.emplace_back(c);
  out.trim();
  return out;
}

const Poly& BiPoly::y_coeff(std::size_t j) const { return j < by_y_.size() ? by_y_[j] : kZeroPoly; }

void BiPoly::trim() {
  while (!by_y_.empty() && by_y_.back().is_zero()) by_y_.pop_back();
}

BiPoly BiPoly::swapped() const {
  std::size_t x_len = 0;
  for (const auto& p : by_y_) x_len = std::max(x_len, p.coeffs().size());
  BiPoly out;
  out.by_y_.resize(x_len);
  for (std::size_t i = 0; i < x_len; ++i) {
    std::vector<SymCoeff> column(by_y_.size());
    for (std::size_t j = 0; j < by_y_.size(); ++j) column[j] = by_y_[j].coeff(i);
    out.by_y_[i] = Poly(std::move(column));
  }
  out.trim();
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& p : out.by_y_) p = -p;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.by_y_.size() > by_y_.size()) by_y_.resize(o.by_y_.size());
  for (std::size_t j = 0; j < o.by_y_.size(); ++j) by_y_[j] += o.by_y_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.by_y_.size() > by_y_.size()) by_y_.resize(o.by_y_.size());
  for (std::size_t j = 0; j < o.by_y_.size(); ++j) by_y_[j] -= o.by_y_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const SymCoeff& c) {
  for (auto& p : by_y_) p *= c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BiPoly out;
  out.by_y_.resize(a.by_y_.size() + b.by_y_.size() - 1);
  for (std::size_t i = 0; i < a.by_y_.size(); ++i) {
    if (a.by_y_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.by_y_.size(); ++j) {
      if (b.by_y_[j].is_zero()) continue;
      out.by_y_[i + j] += a.by_y_[i] * b.by_y_[j];
    }
  }
  out.trim();
  return out;
}

std::string BiPoly::str() const {
  if (by_y_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = by_y_.size(); j-- > 0;) {
    if (by_y_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << by_y_[j].str("x") << ")";
    if (j > 0) os << "*y" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

}  // namespace rodrigues
