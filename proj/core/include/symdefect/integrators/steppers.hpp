#pragma once

#include <vector>

#include "symdefect/integrators/implicit_midpoint.hpp"
#include "symdefect/integrators/schemes.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::integrators {

using numkit::ComplexMatrix;

/// E_A(a_J t) E_B(b_{J-1} t) ... E_B(b_1 t) E_A(a_1 t) u. Stages with a zero
/// coefficient are skipped (E(0, .) is the identity).
[[nodiscard]] ComplexVector step_splitting(const SplittingScheme& scheme,
                                           const problems::SplitNonlinearProblem& prob,
                                           double tau, const ComplexVector& u);

/// exp(tau A(t0 + tau/2)).
[[nodiscard]] ComplexMatrix exp_midpoint_propagator(const problems::NonautonomousLinearProblem& prob,
                                                    double t0, double tau);
[[nodiscard]] ComplexVector step_exp_midpoint(const problems::NonautonomousLinearProblem& prob,
                                              double t0, double tau, const ComplexVector& u);

/// B_j = sum_k a_jk A(t0 + c_k tau), j = 1..J.
[[nodiscard]] std::vector<ComplexMatrix> cfm_exponents(const CfmScheme& scheme,
                                                       const problems::NonautonomousLinearProblem& prob,
                                                       double t0, double tau);
[[nodiscard]] ComplexVector step_cfm(const CfmScheme& scheme,
                                     const problems::NonautonomousLinearProblem& prob, double t0,
                                     double tau, const ComplexVector& u);

/// Gauss nodes of the fourth-order Magnus scheme.
inline constexpr double magnus4_c1 = 0.5 - 0.28867513459481288225;  // 1/2 - sqrt(3)/6
inline constexpr double magnus4_c2 = 0.5 + 0.28867513459481288225;

/// B = (A1 + A2)/2 - (sqrt(3)/12) tau [A1, A2], A_i = A(t0 + c_i tau).
[[nodiscard]] ComplexMatrix magnus4_exponent(const problems::NonautonomousLinearProblem& prob,
                                             double t0, double tau);
[[nodiscard]] ComplexVector step_magnus4(const problems::NonautonomousLinearProblem& prob,
                                         double t0, double tau, const ComplexVector& u);

}  // namespace symdefect::integrators
