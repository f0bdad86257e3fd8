#pragma once

#include <functional>

#include "symdefect/defect/defect.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::control {

using numkit::ComplexVector;

struct FlowWithDerivative {
  ComplexVector value;       // E(t, u)
  ComplexVector derivative;  // d/du E(t, u) applied to v
};

/// Classical RK4 on u' = F(u) together with the variational equation
/// v' = F'(u) v, using ceil(|t|/max_step) equal steps.
[[nodiscard]] FlowWithDerivative variational_flow(const problems::AutonomousProblem& prob,
                                                  double t, const ComplexVector& u,
                                                  const ComplexVector& v, double max_step = 1e-3);

/// Vector-valued adaptive Gauss-Kronrod (7/15) quadrature. Subdivides until
/// the summed error estimate is below abs_tol; throws ConvergenceError when
/// max_intervals is exceeded.
[[nodiscard]] ComplexVector integrate_gk15(const std::function<ComplexVector(double)>& f,
                                           double a, double b, double abs_tol,
                                           int max_intervals = 2000);

/// One-step scheme with its defect of the requested kind at step size s.
using DefectEvaluator =
    std::function<defect::DefectOutput(double s, const ComplexVector& u, defect::DefectKind)>;

struct OracleOptions {
  double quadrature_tol = 1e-13;
  double flow_step = 1e-3;
};

/// Evaluates the integral representation of the local error S(tau,u0) - E(tau,u0):
///  classical:    int_0^tau  dE(tau-s, S(s,u0)) D_c(s,u0) ds
///  symmetrized:  int_0^tau  dE((tau-s)/2, S(s,x)) D_s(s,x) ds,  x = E((tau-s)/2, u0)
/// with exact flows replaced by RK4. Intended for dim <= 4.
[[nodiscard]] ComplexVector local_error_integral_oracle(const problems::AutonomousProblem& prob,
                                                        const DefectEvaluator& scheme, double tau,
                                                        const ComplexVector& u0,
                                                        defect::DefectKind kind,
                                                        const OracleOptions& options = {});

}  // namespace symdefect::control
