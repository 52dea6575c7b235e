#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace ccrsim {

// Shortest round-trip text for a double, used in error messages.
inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's contract.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where the spacetime description is valid
// (e.g. 1 + 2gx <= 0 or a superluminal speed).
class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Integration step budget too small for the requested resolution.
class ResolutionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Floating-point result outside what the mathematics allows.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold (e.g. the CCR sum) was violated.
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Relative entropy with supp(rho) not contained in supp(sigma).
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Post-selection on a branch of zero probability.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccrsim
