#pragma once

#include <stdexcept>
#include <string>

namespace hypcollar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (user error).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested dimension has no supported formula.
class UnsupportedDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input describes a configuration the geometric operation cannot handle
/// (intersecting hyperplanes where a perpendicular is needed, a non-loxodromic
/// element where a translation length is needed, ...).
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical failure: non-convergence or loss of representability.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace hypcollar
