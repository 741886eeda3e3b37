#pragma once

#include <stdexcept>
#include <string>

namespace qproc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant failed (unitarity, projector, completeness, ...).
/// `residual` is the max-norm residual that exceeded the tolerance.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The requested computation is not defined for this input
/// (e.g. closed-form rate of a nondeterministic generator).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Numerical degeneracy detected at run time.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qproc
