#pragma once

#include <stdexcept>
#include <string>

namespace dvt {

/// Invalid parameters or inputs outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A received word could not be mapped back to a codeword.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decoder reached a state that the correctness argument rules out for
/// inputs satisfying its precondition. Reported as a decode failure.
class InternalInvariantViolation : public DecodeError {
 public:
  using DecodeError::DecodeError;
};

/// An exhaustive routine would exceed the configured enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dvt
