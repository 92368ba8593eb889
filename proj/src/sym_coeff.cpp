#include "rodrigues/sym_coeff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rodrigues/errors.hpp"

namespace rodrigues {

unsigned Monomial::exponent(Symbol s) const {
  switch (s) {
    case Symbol::log_alpha: return la;
    case Symbol::log_beta: return lb;
    case Symbol::index: return n;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return Monomial{static_cast<std::uint16_t>(a.la + b.la), static_cast<std::uint16_t>(a.lb + b.lb),
                  static_cast<std::uint16_t>(a.n + b.n)};
}

SymCoeff::SymCoeff(Rational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

SymCoeff SymCoeff::symbol(Symbol s, unsigned power) {
  Monomial m;
  switch (s) {
    case Symbol::log_alpha: m.la = static_cast<std::uint16_t>(power); break;
    case Symbol::log_beta: m.lb = static_cast<std::uint16_t>(power); break;
    case Symbol::index: m.n = static_cast<std::uint16_t>(power); break;
  }
  return term(m, Rational(1));
}

SymCoeff SymCoeff::term(Monomial m, Rational c) {
  SymCoeff out;
  if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  return out;
}

bool SymCoeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational SymCoeff::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return Rational(0);
}

std::optional<Rational> SymCoeff::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

unsigned SymCoeff::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

SymCoeff SymCoeff::substitute(Symbol s, const Rational& value) const {
  SymCoeff out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    unsigned e = 0;
    switch (s) {
      case Symbol::log_alpha: e = reduced.la; reduced.la = 0; break;
      case Symbol::log_beta: e = reduced.lb; reduced.lb = 0; break;
      case Symbol::index: e = reduced.n; reduced.n = 0; break;
    }
    out += term(reduced, c * pow(value, e));
  }
  return out;
}

double SymCoeff::evaluate(const SymbolValues& v) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    acc += c.to_double() * std::pow(v.log_alpha, m.la) * std::pow(v.log_beta, m.lb) *
           std::pow(v.index, m.n);
  }
  return acc;
}

SymCoeff SymCoeff::operator-() const {
  SymCoeff out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void SymCoeff::accumulate(const SymCoeff& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : -b->second);
      ++b;
    } else {
      Rational sum = sign > 0 ? a->second + b->second : a->second - b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

SymCoeff& SymCoeff::operator+=(const SymCoeff& o) {
  accumulate(o, +1);
  return *this;
}

SymCoeff& SymCoeff::operator-=(const SymCoeff& o) {
  accumulate(o, -1);
  return *this;
}

SymCoeff& SymCoeff::operator*=(const SymCoeff& o) {
  *this = *this * o;
  return *this;
}

SymCoeff& SymCoeff::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
  } else if (!r.is_one()) {
    for (auto& [m, c] : terms_) c *= r;
  }
  return *this;
}

SymCoeff operator*(const SymCoeff& a, const SymCoeff& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_.front().first.is_one()) return b * a.terms_.front().second;
  if (b.terms_.size() == 1 && b.terms_.front().first.is_one()) return a * b.terms_.front().second;

  std::vector<SymCoeff::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  std::sort(products.begin(), products.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  SymCoeff out;
  for (auto& term : products) {
    if (!out.terms_.empty() && out.terms_.back().first == term.first) {
      out.terms_.back().second += term.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(term));
    }
  }
  return out;
}

std::string SymCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    const Rational mag = negative ? -c : c;
    bool wrote = false;
    if (!mag.is_one() || m.is_one()) {
      os << mag;
      wrote = true;
    }
    const auto factor = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    factor("La", m.la);
    factor("Lb", m.lb);
    factor("n", m.n);
    first = false;
  }
  return os.str();
}

}  // namespace rodrigues
