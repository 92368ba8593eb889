#pragma once

#include <stdexcept>
#include <string>

namespace rodrigues {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: JSON, family descriptors, flag values.
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain, e.g. a polynomial-only
// routine handed an exp() descriptor, or a zero constant term where a
// unit is required.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rodrigues
