#pragma once

#include <stdexcept>
#include <string>

namespace ellipsoid {

// Thrown when a caller violates a documented precondition (domain error).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an iterative numerical procedure fails to converge or hits a
// degenerate configuration (singular matrix, step underflow, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellipsoid
