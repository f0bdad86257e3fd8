#pragma once

#include "symdefect/control/registry.hpp"

namespace symdefect::control {

struct ReferenceOptions {
  double tol = 1e-12;
  int max_levels = 20;
};

/// Integrates n equal corrected steps of `method` from (t0, u0) to T.
[[nodiscard]] ComplexVector integrate_corrected(const Method& method, double t0, double T,
                                                const ComplexVector& u0, long n);

/// High-accuracy approximation of E(T - t0) u0.
///
/// Uses the closed-form flow or trajectory of the setup when one applies.
/// Otherwise runs the corrected reference scheme (or `via`, when given)
/// with 1, 2, 4, ... steps until two successive results differ by less than
/// tol in the problem norm, and returns the finer one. Throws
/// ConvergenceError after max_levels halvings.
[[nodiscard]] ComplexVector reference_solve(const ProblemSetup& setup, double t0, double T,
                                            const ComplexVector& u0,
                                            const ReferenceOptions& options = {},
                                            const Method* via = nullptr);

}  // namespace symdefect::control
