#pragma once

#include "symdefect/defect/defect.hpp"
#include "symdefect/integrators/step_output.hpp"

namespace symdefect::control {

/// estimator = (tau/(p+1)) d,  u_corrected = u_next - estimator.
[[nodiscard]] integrators::StepOutput estimate_and_correct(const defect::DefectOutput& out,
                                                           double tau, int p);

}  // namespace symdefect::control
