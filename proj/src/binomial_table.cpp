#include "rodrigues/binomial_table.hpp"

namespace rodrigues {

Rational BinomialTable::operator()(int n, int k) const {
  if (!overrides_.empty()) {
    if (const auto it = overrides_.find({n, k}); it != overrides_.end()) return it->second;
  }
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

void BinomialTable::override_entry(int n, int k, Rational value) {
  overrides_[{n, k}] = std::move(value);
}

}  // namespace rodrigues
