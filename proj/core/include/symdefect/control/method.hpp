#pragma once

#include <functional>
#include <memory>
#include <string>

#include "symdefect/defect/defect.hpp"
#include "symdefect/integrators/step_output.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::control {

using numkit::ComplexVector;

/// A one-step scheme bound to a problem, with its defect evaluator.
/// Autonomous schemes ignore t0.
class Method {
 public:
  using StepFn = std::function<ComplexVector(double t0, double tau, const ComplexVector& u)>;
  using DefectFn = std::function<defect::DefectOutput(double t0, double tau, const ComplexVector& u)>;

  Method(std::string name, int order, std::shared_ptr<const problems::EvolutionProblem> problem,
         StepFn step, DefectFn defect);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const problems::EvolutionProblem& problem() const noexcept { return *problem_; }
  [[nodiscard]] bool has_defect() const noexcept { return static_cast<bool>(defect_); }

  [[nodiscard]] ComplexVector step(double t0, double tau, const ComplexVector& u) const {
    return step_(t0, tau, u);
  }
  /// Throws std::logic_error when no defect evaluator is attached.
  [[nodiscard]] defect::DefectOutput step_with_defect(double t0, double tau,
                                                      const ComplexVector& u) const;
  /// Step, defect, estimator and corrected state.
  [[nodiscard]] integrators::StepOutput corrected_step(double t0, double tau,
                                                       const ComplexVector& u) const;

 private:
  std::string name_;
  int order_;
  std::shared_ptr<const problems::EvolutionProblem> problem_;
  StepFn step_;
  DefectFn defect_;
};

}  // namespace symdefect::control
