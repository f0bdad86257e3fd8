#include "symdefect/control/method.hpp"

#include <stdexcept>

#include "symdefect/control/estimate.hpp"

namespace symdefect::control {

Method::Method(std::string name, int order,
               std::shared_ptr<const problems::EvolutionProblem> problem, StepFn step,
               DefectFn defect)
    : name_(std::move(name)),
      order_(order),
      problem_(std::move(problem)),
      step_(std::move(step)),
      defect_(std::move(defect)) {
  if (!problem_ || !step_) throw std::invalid_argument("Method: problem and step are required");
}

defect::DefectOutput Method::step_with_defect(double t0, double tau,
                                              const ComplexVector& u) const {
  if (!defect_) throw std::logic_error("Method '" + name_ + "' has no defect evaluator");
  return defect_(t0, tau, u);
}

integrators::StepOutput Method::corrected_step(double t0, double tau,
                                               const ComplexVector& u) const {
  return estimate_and_correct(step_with_defect(t0, tau, u), tau, order_);
}

}  // namespace symdefect::control
