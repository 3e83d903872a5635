#pragma once

#include <stdexcept>
#include <string>

namespace nestcond {

// Precondition violation: mismatched endpoints, malformed input data.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or search exceeded its configured budget.
// The outcome is "unknown", never a negative answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nestcond
