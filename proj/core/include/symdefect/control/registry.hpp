#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symdefect/control/method.hpp"

namespace symdefect::control {

/// A named problem instance with its initial data and whatever exact
/// solution information is available for computing true errors.
struct ProblemSetup {
  std::string name;
  std::shared_ptr<const problems::EvolutionProblem> problem;
  ComplexVector initial_state;
  double t0 = 0.0;
  /// E(t1 - t0) u for arbitrary u, when known in closed form.
  std::function<ComplexVector(double t0, double t1, const ComplexVector& u)> exact_flow;
  /// Exact solution through (t0, initial_state), when known.
  std::function<ComplexVector(double t)> exact_trajectory;
  /// Scheme used (corrected) by reference_solve when neither is available.
  std::string reference_scheme;
  std::string reference_variant = "hermite";
};

/// "nls-soliton", "nls-two-soliton", "rosen-zener", "toy-split",
/// "scalar-quadratic". Throws std::invalid_argument for other names.
[[nodiscard]] ProblemSetup make_problem(std::string_view name);
[[nodiscard]] std::vector<std::string> problem_names();

/// "imr", "strang", "emb43aks", "expmid", "cf4", "magnus4".
/// kind selects classical/symmetrized (imr, strang); variant selects
/// taylor/hermite (cf4, magnus4). Combinations that do not exist throw
/// std::invalid_argument, so do schemes that do not fit the problem type.
[[nodiscard]] Method make_method(const ProblemSetup& setup, std::string_view scheme,
                                 defect::DefectKind kind = defect::DefectKind::symmetrized,
                                 defect::ExpVariant variant = defect::ExpVariant::hermite);
[[nodiscard]] std::vector<std::string> scheme_names();

}  // namespace symdefect::control
