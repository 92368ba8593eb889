#pragma once

// Reference values computed without the library's series or kernel code.

#include <vector>

#include "rodrigues/poly.hpp"
#include "rodrigues/rational.hpp"

namespace rodrigues::oracle {

// Physicists' Hermite polynomials from H_{n+1} = 2x H_n - 2n H_{n-1}.
inline std::vector<std::vector<Rational>> hermite(int n_max) {
  std::vector<std::vector<Rational>> h{{Rational(1)}, {Rational(0), Rational(2)}};
  for (int n = 1; n < n_max; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 2);
    for (std::size_t i = 0; i < h[n].size(); ++i) next[i + 1] += Rational(2) * h[n][i];
    for (std::size_t i = 0; i < h[n - 1].size(); ++i) next[i] -= Rational(2L * n) * h[n - 1][i];
    h.push_back(std::move(next));
  }
  h.resize(static_cast<std::size_t>(n_max) + 1);
  return h;
}

// Bernoulli numbers with B_1 = -1/2 from sum_{j<=n} C(n+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int n_max) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int j = 0; j < n; ++j) acc += binomial(n + 1, j) * b[j];
    b.push_back(-acc / Rational(n + 1));
  }
  return b;
}

// Long division of 1 by (e^t - 1)/t = sum t^j/(j+1)!, done on plain
// rationals: coefficient k of the quotient times k! is B_k.
inline std::vector<Rational> bernoulli_by_division(int n_max) {
  std::vector<Rational> d, q;
  for (int j = 0; j <= n_max; ++j) d.push_back(Rational(1) / factorial(j + 1));
  std::vector<Rational> rem(static_cast<std::size_t>(n_max) + 1);
  rem[0] = Rational(1);
  for (int k = 0; k <= n_max; ++k) {
    const Rational c = rem[k] / d[0];
    q.push_back(c);
    for (int j = 0; k + j <= n_max; ++j) rem[k + j] -= c * d[j];
  }
  for (int k = 0; k <= n_max; ++k) q[k] *= factorial(k);
  return q;
}

// B_n(y) = sum_k C(n, k) B_k y^{n-k}, lowest power first.
inline std::vector<Rational> bernoulli_polynomial(int n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[n - k] = binomial(n, k) * b[k];
  return out;
}

// H_n(x, y) from exp(xt + yt^2): n! sum_k y^k x^{n-2k} / ((n-2k)! k!), at y = 1.
inline std::vector<Rational> kampe_de_feriet(int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) out[n - 2 * k] = factorial(n) / (factorial(n - 2 * k) * factorial(k));
  return out;
}

}  // namespace rodrigues::oracle
