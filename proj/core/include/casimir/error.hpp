#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented invariant; nothing was computed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The model could not produce a number for otherwise valid-looking input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// arccos argument left [-1, 1] by more than the clamp tolerance.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// sin(phi - theta2) vanished in the effective-separation formula.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Effective separation came out non-positive.
class NonPositiveSeparationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Period length in the effectiveness ratio was not positive.
class DegenerateDenominatorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : NumericalError(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace casimir
