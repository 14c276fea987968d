#pragma once

#include <stdexcept>
#include <string>

namespace bineq {

/// Argument outside the mathematical domain of an operation (non-finite input,
/// R <= 0, zero leading coefficient, degree mismatch, inadmissible operator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed configuration, request, or serialized input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ratio search whose denominator vanishes on the circle.
class UnboundedRatioError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An operation that needs a converged root set received one that is not.
class NotConvergedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bineq
