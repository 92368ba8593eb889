#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rodrigues/sym_coeff.hpp"

namespace rodrigues {

enum class Status { verified, failed, skipped };

const char* to_string(Status s);

// Where the first nonzero residual coefficient was found. Fields that do
// not apply to an identity stay empty.
struct FirstFailure {
  std::optional<int> n;
  std::optional<int> t_order;
  std::optional<int> eta_order;
  std::optional<int> y_power;
  std::optional<int> x_power;
  std::optional<SymCoeff> coefficient;
};

struct VerificationReport {
  std::string identity;
  Status status = Status::verified;
  int order = 0;
  std::optional<FirstFailure> first_failure;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;

  bool ok() const { return status != Status::failed; }
};

}  // namespace rodrigues
