#pragma once

#include <stdexcept>
#include <string>

namespace polylog {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The argument sits on an excluded branch cut of an integral representation.
class CutViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact rational arithmetic exceeded the integer width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced NaN or Inf.
class NonFiniteIntegrand : public Error {
 public:
  NonFiniteIntegrand(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace polylog
