#pragma once

#include <cstddef>
#include <vector>

#include "symdefect/numkit/dense_lu.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::integrators {

using numkit::ComplexVector;

struct NewtonOptions {
  double tolerance = 1e-13;  // relative to max(1, |u|)
  int max_iterations = 25;
};

/// The real-linear map v -> v - (tau/2) F'(m) v, assembled as a 2n x 2n real
/// matrix (real and imaginary parts interleaved) and LU-factored once.
class MidpointJacobian {
 public:
  MidpointJacobian(const problems::AutonomousProblem& prob, double tau, const ComplexVector& m);

  [[nodiscard]] ComplexVector solve(const ComplexVector& rhs) const;
  [[nodiscard]] std::size_t dim() const noexcept { return n_; }

 private:
  std::size_t n_;
  numkit::DenseLu<double> lu_;
};

struct MidpointResult {
  ComplexVector w;
  int iterations = 0;
  double residual = 0.0;
};

/// Solves w = u + tau F((u + w)/2) by Newton's method from w0 = u + tau F(u).
/// Throws StepFailure when the residual does not reach the tolerance.
[[nodiscard]] MidpointResult solve_implicit_midpoint(const problems::AutonomousProblem& prob,
                                                     double tau, const ComplexVector& u,
                                                     const NewtonOptions& options = {});

[[nodiscard]] ComplexVector step_implicit_midpoint(const problems::AutonomousProblem& prob,
                                                   double tau, const ComplexVector& u,
                                                   const NewtonOptions& options = {});

}  // namespace symdefect::integrators
