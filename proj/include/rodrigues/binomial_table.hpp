#pragma once

#include <map>
#include <utility>

#include "rodrigues/rational.hpp"

namespace rodrigues {

// Exact binomial coefficients with optional per-entry overrides, used by the
// recurrence residuals. Overrides exist so the harness can check that a
// single wrong coefficient is caught.
class BinomialTable {
 public:
  Rational operator()(int n, int k) const;
  void override_entry(int n, int k, Rational value);

 private:
  std::map<std::pair<int, int>, Rational> overrides_;
};

}  // namespace rodrigues
