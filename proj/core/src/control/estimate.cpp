#include "symdefect/control/estimate.hpp"

namespace symdefect::control {

integrators::StepOutput estimate_and_correct(const defect::DefectOutput& out, double tau, int p) {
  integrators::StepOutput s;
  s.tau = tau;
  s.u_next = out.u_next;
  s.defect = out.d;
  s.estimator = (tau / static_cast<double>(p + 1)) * out.d;
  s.u_corrected = out.u_next - *s.estimator;
  return s;
}

}  // namespace symdefect::control
