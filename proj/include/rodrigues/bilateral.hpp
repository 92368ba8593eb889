#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/bipoly.hpp"
#include "rodrigues/poly.hpp"
#include "rodrigues/report.hpp"
#include "rodrigues/series.hpp"

namespace rodrigues {

// Omega_k(y) families. Polynomials in y reuse Poly.
struct ApostolBernoulliOmega {
  unsigned order = 1;
  Rational lambda{1};
};
struct ThetaOmega {
  FamilySpec family;
};
struct TableOmega {
  std::vector<Poly> values;
};
using OmegaFamily = std::variant<ApostolBernoulliOmega, ThetaOmega, TableOmega>;

struct InverseFactorial {};
using CoefficientRule = std::variant<InverseFactorial, std::vector<Rational>>;

struct BilateralSpec {
  OmegaFamily omega;
  CoefficientRule a = InverseFactorial{};
  int mu = 0;
  int nu = 1;
  int p = 1;

  // Throws InputError on nu < 1, p < 1, mu < 0 or a zero a_k.
  void validate() const;
  Rational coefficient(int k) const;
};

/// Apostol-Bernoulli polynomial of the given order: n! [t^n] of
/// (t / (lambda e^t - 1))^order e^{y t}, as a polynomial in y.
Poly apostol_bernoulli(int n, unsigned order, const Rational& lambda);

// (t / (lambda e^t - 1))^order e^{y t} to the given order; coefficients are
// polynomials in y.
TruncatedSeries<Poly> apostol_bernoulli_generator(unsigned order, const Rational& lambda,
                                                  int series_order);

// Omega_k(y), cached per family instance by the caller if needed.
Poly omega_value(const OmegaFamily& omega, int k);

// sum_{k<=K} a_k Omega_{mu+nu k}(y) z^k, with z carried as eta.
TruncatedSeries<Poly> lambda_series(const BilateralSpec& spec, int order);

// Closed form of Lambda when one is known: Apostol-Bernoulli or Theta omega
// with a_k = 1/k!, mu = 0, nu = 1.
std::optional<TruncatedSeries<Poly>> lambda_closed_form(const BilateralSpec& spec, int order);

/// Phi_{n,p,mu,nu}(x; y; zeta): entry k holds the zeta^k coefficient
/// a_k / (n-pk)! q_{n-pk}(x) Omega_{mu+nu k}(y), k = 0..floor(n/p).
std::vector<BiPoly> phi_poly(const BilateralSpec& spec, const FamilySpec& family, int n);

/// sum_n Phi_n(x; y; eta / t^p) t^n, rearranged so every power of t is
/// nonnegative, truncated to t^N eta^K.
TruncatedSeries<BiPoly> bilateral_lhs(const BilateralSpec& spec, const FamilySpec& family,
                                      int order_t, int order_eta);

// Reduced right-hand side psi(x+t) beta^{-(phi2(x+t)-phi2(x))} Lambda(y; eta).
TruncatedSeries<BiPoly> bilateral_rhs(const BilateralSpec& spec, const FamilySpec& family,
                                      int order_t, int order_eta);

VerificationReport verify_bilateral(const BilateralSpec& spec, const FamilySpec& family,
                                    int order_t, int order_eta);

// Exchanges (x, t) with (y, eta); the orders swap as well.
TruncatedSeries<BiPoly> swap_variables(const TruncatedSeries<BiPoly>& s);

}  // namespace rodrigues
