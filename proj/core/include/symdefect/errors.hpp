#pragma once

#include <stdexcept>
#include <string>

namespace symdefect {

// Shape mismatch between operands (non-square, unequal lengths, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A single step could not be completed: Newton did not converge, a subflow
// hit a pole, a linear solve broke down.
class StepFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative procedure (quadrature, reference halving) ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symdefect
