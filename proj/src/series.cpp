#include "rodrigues/series.hpp"

namespace rodrigues {

TruncatedSeries<Poly> poly_taylor_shift(const Poly& p, int order) {
  TruncatedSeries<Poly> out(SeriesVar::t, order);
  Poly d = p;
  Rational inv_fact(1);
  for (int j = 0; j <= order && !d.is_zero(); ++j) {
    if (j > 0) inv_fact /= Rational(j);
    out[j] = d * SymCoeff(inv_fact);
    d = d.derivative();
  }
  return out;
}

}  // namespace rodrigues
