#pragma once

#include <stdexcept>
#include <string>

namespace utlab {

/// Two series with different truncation orders were combined.
class OrderMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's mathematical domain (non-normalized series,
/// Schur parameter outside the closed disk, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A class-specific operation was requested for class S.
class UnsupportedClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive evaluation would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace utlab
