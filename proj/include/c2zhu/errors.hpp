#pragma once

#include <stdexcept>
#include <string>

namespace c2zhu {

// Everything below except BudgetExceeded indicates an internal inconsistency:
// a correct build never throws them on valid input.

/// Highest-weight peeling drove a coefficient negative.
class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeDimension : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NegativeMultiplicity : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RecursionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Relation space closed at a dimension other than dim V((k+1)θ).
class ClosureDimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A rank computation block exceeded the configured entry budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace c2zhu
