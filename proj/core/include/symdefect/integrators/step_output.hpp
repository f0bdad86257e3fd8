#pragma once

#include <optional>

#include "symdefect/numkit/linalg.hpp"

namespace symdefect::integrators {

/// Result of one step, optionally with defect, estimator and corrected state.
struct StepOutput {
  double tau = 0.0;
  numkit::ComplexVector u_next;
  std::optional<numkit::ComplexVector> defect;
  std::optional<numkit::ComplexVector> estimator;
  std::optional<numkit::ComplexVector> u_corrected;
};

}  // namespace symdefect::integrators
