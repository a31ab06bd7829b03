#pragma once

#include <stdexcept>
#include <string>

namespace relmatch {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an API contract (shapes, empty batches, bad arguments).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Invalid or unknown configuration key/value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure at runtime (NaN loss, divergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Symmetric eigensolver failed to converge within the sweep cap.
class EigenConvergenceError : public NumericalError {
 public:
  EigenConvergenceError(const std::string& msg, double off_residual)
      : NumericalError(msg), off_diagonal_residual(off_residual) {}

  double off_diagonal_residual;
};

/// A matrix required to be positive definite has an eigenvalue at or below
/// the acceptance threshold.
class PositiveDefinitenessError : public DomainError {
 public:
  PositiveDefinitenessError(const std::string& msg, double eigenvalue)
      : DomainError(msg), offending_eigenvalue(eigenvalue) {}

  double offending_eigenvalue;
};

/// Degenerate input (e.g. an all-zero matrix where a nonzero one is needed).
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A basis argument is not orthonormal (or a matrix is not orthogonal).
class BasisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid synthetic-dataset specification.
class SpecError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace relmatch
