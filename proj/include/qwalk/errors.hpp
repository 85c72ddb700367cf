// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Raised when an argument violates a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The walk would leave the preallocated position window.
class HorizonExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A schedule or table was queried outside of its domain.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inconsistent run configuration (horizon larger than the window, bad spec strings).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk
