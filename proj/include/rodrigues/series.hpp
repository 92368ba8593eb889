#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rodrigues/bipoly.hpp"
#include "rodrigues/errors.hpp"
#include "rodrigues/poly.hpp"
#include "rodrigues/rational.hpp"
#include "rodrigues/sym_coeff.hpp"

namespace rodrigues {

enum class SeriesVar { t, eta };

// Ring operations the series algorithms need from a coefficient type.
// A value-initialized coefficient is zero.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational scale(const Rational& c, const Rational& r) { return c * r; }
  static Rational unit_inverse(const Rational& c) {
    if (c.is_zero()) throw PreconditionError("series constant term is not invertible");
    return c.inverse();
  }
};

template <>
struct CoeffTraits<double> {
  static double one() { return 1.0; }
  static bool is_zero(double c) { return c == 0.0; }
  static double scale(double c, const Rational& r) { return c * r.to_double(); }
  static double unit_inverse(double c) {
    if (c == 0.0) throw PreconditionError("series constant term is not invertible");
    return 1.0 / c;
  }
};

template <>
struct CoeffTraits<SymCoeff> {
  static SymCoeff one() { return SymCoeff(1); }
  static bool is_zero(const SymCoeff& c) { return c.is_zero(); }
  static SymCoeff scale(const SymCoeff& c, const Rational& r) { return c * r; }
  static SymCoeff unit_inverse(const SymCoeff& c) {
    const auto r = c.as_rational();
    if (!r || r->is_zero()) throw PreconditionError("series constant term is not a nonzero rational");
    return SymCoeff(r->inverse());
  }
};

template <>
struct CoeffTraits<Poly> {
  static Poly one() { return Poly(1); }
  static bool is_zero(const Poly& c) { return c.is_zero(); }
  static Poly scale(const Poly& c, const Rational& r) { return c * SymCoeff(r); }
  static Poly unit_inverse(const Poly& c) {
    if (!c.is_constant()) throw PreconditionError("series constant term is not a nonzero rational");
    return Poly(CoeffTraits<SymCoeff>::unit_inverse(c.coeff(0)));
  }
};

template <>
struct CoeffTraits<BiPoly> {
  static BiPoly one() { return BiPoly(1); }
  static bool is_zero(const BiPoly& c) { return c.is_zero(); }
  static BiPoly scale(const BiPoly& c, const Rational& r) { return c * SymCoeff(r); }
  static BiPoly unit_inverse(const BiPoly& c) {
    if (c.y_terms() > 1) throw PreconditionError("series constant term is not a nonzero rational");
    return BiPoly::in_x(CoeffTraits<Poly>::unit_inverse(c.y_coeff(0)));
  }
};

/// Formal power series in t, or in (t, eta), truncated per variable.
///
/// A univariate series of order N holds the coefficients of t^0..t^N.
/// Bivariate series are truncated on the box [0, N_t] x [0, N_eta]; products
/// of box-truncated series are exact on the box.
template <class C>
class TruncatedSeries {
 public:
  using coeff_type = C;

  TruncatedSeries(SeriesVar var, int order) : vars_{var}, orders_{order, 0} {
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  TruncatedSeries(int order_t, int order_eta)
      : vars_{SeriesVar::t, SeriesVar::eta}, orders_{order_t, order_eta} {
    check_order(order_t);
    check_order(order_eta);
    coeffs_.resize(static_cast<std::size_t>(order_t + 1) * static_cast<std::size_t>(order_eta + 1));
  }

  bool bivariate() const { return vars_.size() == 2; }
  const std::vector<SeriesVar>& vars() const { return vars_; }
  int order() const { return orders_[0]; }
  int order_t() const { return orders_[0]; }
  int order_eta() const { return orders_[1]; }

  const C& operator[](int i) const { return coeffs_.at(index(i, 0)); }
  C& operator[](int i) { return coeffs_.at(index(i, 0)); }
  const C& at(int i, int j) const { return coeffs_.at(index(i, j)); }
  C& at(int i, int j) { return coeffs_.at(index(i, j)); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const C& c) { return CoeffTraits<C>::is_zero(c); });
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return combine(o, +1); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return combine(o, -1); }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  TruncatedSeries scaled(const C& c) const {
    TruncatedSeries out = *this;
    for (auto& v : out.coeffs_) v = v * c;
    return out;
  }

  // Reduces to a lower truncation order (never extends).
  TruncatedSeries truncated(int order) const {
    require_univariate("truncated");
    TruncatedSeries out(vars_[0], std::min(order, orders_[0]));
    for (int i = 0; i <= out.order(); ++i) out[i] = (*this)[i];
    return out;
  }

  // d/dt; the result loses one order.
  TruncatedSeries derivative() const {
    require_univariate("derivative");
    if (orders_[0] == 0) throw PreconditionError("cannot differentiate an order-0 series");
    TruncatedSeries out(vars_[0], orders_[0] - 1);
    for (int i = 0; i < orders_[0]; ++i) out[i] = CoeffTraits<C>::scale((*this)[i + 1], Rational(i + 1));
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static void check_order(int order) {
    if (order < 0) throw PreconditionError("series order must be nonnegative");
  }

  void require_univariate(const char* what) const {
    if (bivariate()) throw PreconditionError(std::string(what) + " requires a univariate series");
  }

  std::size_t index(int i, int j) const {
    if (i < 0 || i > orders_[0] || j < 0 || j > orders_[1])
      throw PreconditionError("series index out of the truncation box");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(orders_[1] + 1) +
           static_cast<std::size_t>(j);
  }

  TruncatedSeries& combine(const TruncatedSeries& o, int sign) {
    if (vars_ != o.vars_) throw PreconditionError("series variable sets differ");
    TruncatedSeries out = bivariate() ? TruncatedSeries(std::min(order_t(), o.order_t()),
                                                        std::min(order_eta(), o.order_eta()))
                                      : TruncatedSeries(vars_[0], std::min(order(), o.order()));
    for (int i = 0; i <= out.orders_[0]; ++i) {
      for (int j = 0; j <= out.orders_[1]; ++j) {
        out.at(i, j) = sign > 0 ? at(i, j) + o.at(i, j) : at(i, j) - o.at(i, j);
      }
    }
    *this = std::move(out);
    return *this;
  }

  std::vector<SeriesVar> vars_;
  std::array<int, 2> orders_;
  std::vector<C> coeffs_;
};

/// Cauchy product, truncated to the smaller order in each variable.
template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  if (a.vars() != b.vars()) throw PreconditionError("series variable sets differ");
  if (!a.bivariate()) {
    TruncatedSeries<C> out(a.vars()[0], std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (CoeffTraits<C>::is_zero(a[i])) continue;
      for (int j = 0; i + j <= out.order(); ++j) {
        if (CoeffTraits<C>::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }
  TruncatedSeries<C> out(std::min(a.order_t(), b.order_t()), std::min(a.order_eta(), b.order_eta()));
  for (int i1 = 0; i1 <= out.order_t(); ++i1) {
    for (int j1 = 0; j1 <= out.order_eta(); ++j1) {
      const C& x = a.at(i1, j1);
      if (CoeffTraits<C>::is_zero(x)) continue;
      for (int i2 = 0; i1 + i2 <= out.order_t(); ++i2) {
        for (int j2 = 0; j1 + j2 <= out.order_eta(); ++j2) {
          const C& y = b.at(i2, j2);
          if (CoeffTraits<C>::is_zero(y)) continue;
          out.at(i1 + i2, j1 + j2) += x * y;
        }
      }
    }
  }
  return out;
}

/// exp(u) for a univariate series with zero constant term, via E' = u'E:
/// E_k = (1/k) sum_{j=1..k} j u_j E_{k-j}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& u) {
  if (u.bivariate()) throw PreconditionError("series_exp requires a univariate series");
  if (!CoeffTraits<C>::is_zero(u[0]))
    throw PreconditionError("series_exp requires a zero constant term");
  TruncatedSeries<C> e(u.vars()[0], u.order());
  e[0] = CoeffTraits<C>::one();
  for (int k = 1; k <= u.order(); ++k) {
    C acc{};
    for (int j = 1; j <= k; ++j) {
      if (CoeffTraits<C>::is_zero(u[j]) || CoeffTraits<C>::is_zero(e[k - j])) continue;
      acc += CoeffTraits<C>::scale(u[j] * e[k - j], Rational(j));
    }
    e[k] = CoeffTraits<C>::scale(acc, Rational(1, k));
  }
  return e;
}

/// Multiplicative inverse of a univariate series whose constant term is a
/// unit of the rationals.
template <class C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& u) {
  if (u.bivariate()) throw PreconditionError("series_inverse requires a univariate series");
  const C inv0 = CoeffTraits<C>::unit_inverse(u[0]);
  TruncatedSeries<C> v(u.vars()[0], u.order());
  v[0] = inv0;
  for (int k = 1; k <= u.order(); ++k) {
    C acc{};
    for (int j = 1; j <= k; ++j) {
      if (CoeffTraits<C>::is_zero(u[j])) continue;
      acc += u[j] * v[k - j];
    }
    v[k] = -(acc * inv0);
  }
  return v;
}

template <class C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& u, unsigned exponent) {
  if (u.bivariate()) throw PreconditionError("series_pow requires a univariate series");
  TruncatedSeries<C> out(u.vars()[0], u.order());
  out[0] = CoeffTraits<C>::one();
  for (unsigned i = 0; i < exponent; ++i) out = series_mul(out, u);
  return out;
}

// Sum of c_j a^j over the stored coefficients of a univariate series.
template <class C, class S>
C evaluate_series_at(const TruncatedSeries<C>& u, const S& a) {
  if (u.bivariate()) throw PreconditionError("evaluate_series_at requires a univariate series");
  C acc{};
  for (int k = u.order(); k >= 0; --k) acc = acc * a + u[k];
  return acc;
}

/// p(x + t) expanded in t: coefficient j is p^{(j)}(x) / j!.
TruncatedSeries<Poly> poly_taylor_shift(const Poly& p, int order);

// Embeds a univariate t-series into (t, eta) with eta-order `order_eta`,
// mapping coefficients through `lift`.
template <class From, class To, class F>
TruncatedSeries<To> lift_t(const TruncatedSeries<From>& s, int order_eta, F lift) {
  TruncatedSeries<To> out(s.order(), order_eta);
  for (int i = 0; i <= s.order(); ++i) out.at(i, 0) = lift(s[i]);
  return out;
}

template <class From, class To, class F>
TruncatedSeries<To> lift_eta(const TruncatedSeries<From>& s, int order_t, F lift) {
  TruncatedSeries<To> out(order_t, s.order());
  for (int j = 0; j <= s.order(); ++j) out.at(0, j) = lift(s[j]);
  return out;
}

}  // namespace rodrigues
