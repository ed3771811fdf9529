#pragma once

#include <stdexcept>
#include <string>

namespace vhc {

/// Input that does not parse or violates a type invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value handed to an operation whose documented precondition it fails.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested size exceeds the configured enumeration bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vhc
