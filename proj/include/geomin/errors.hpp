#pragma once

#include <stdexcept>
#include <string>

namespace geomin {

/// Base class for all geomin errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sequence argument with the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An iteration or series failed to converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy cannot be resolved at the working precision,
/// or an intermediate quantity left the representable range.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// No algebraic solution exists for the requested degree.
class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line request.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace geomin
