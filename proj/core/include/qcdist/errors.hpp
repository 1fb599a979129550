#pragma once

#include <stdexcept>
#include <string>

namespace qcdist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not converge within its iteration budget.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

/// Grötzsch constant policy cannot be resolved for the requested dimension.
class PolicyError : public Error {
 public:
  using Error::Error;
};

/// A bound was requested outside the region where its formula is valid.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Root bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Coincident points, or a point at the origin, passed where distinct
/// non-zero points are required.
class DegeneratePairError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qcdist
