#pragma once

#include <stdexcept>
#include <string>

namespace modeconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subsystem labels are duplicated, unknown, or two bases do not match.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument lies outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A constructed object violates one of its type invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A physical precondition does not hold (empty projection, degenerate
/// superposition, failed adiabatic budget).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace modeconv
