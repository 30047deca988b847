#pragma once

#include <stdexcept>
#include <string>

namespace mgb {

/// Base class for every failure that stems from the mathematical input
/// rather than from misuse of the command line.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation needed p to be invertible but p divides a denominator.
class BadPrimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Objects built over different numbers of indeterminates were mixed.
class ArityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A term ordering description does not define a term ordering.
class OrderingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured computation budget (S-pair reductions, cones) ran out.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mgb
