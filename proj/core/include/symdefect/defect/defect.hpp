#pragma once

#include <cstddef>
#include <string_view>

#include "symdefect/integrators/implicit_midpoint.hpp"
#include "symdefect/integrators/schemes.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::defect {

using numkit::ComplexMatrix;
using numkit::ComplexVector;

enum class DefectKind { classical, symmetrized };
/// How the Frechet-derivative terms of exponential integrators are approximated.
enum class ExpVariant { taylor, hermite };

[[nodiscard]] DefectKind parse_defect_kind(std::string_view s);
[[nodiscard]] ExpVariant parse_exp_variant(std::string_view s);
[[nodiscard]] std::string_view to_string(DefectKind k) noexcept;
[[nodiscard]] std::string_view to_string(ExpVariant v) noexcept;

/// The propagated state (bitwise equal to the plain stepper) and the defect.
struct DefectOutput {
  ComplexVector u_next;
  ComplexVector d;
};

/// Implicit midpoint rule. Both kinds reduce to one linear solve with
/// I - (tau/2) F'(m), m = (u + w)/2.
[[nodiscard]] DefectOutput imr_defect(const problems::AutonomousProblem& prob, double tau,
                                      const ComplexVector& u, DefectKind kind,
                                      const integrators::NewtonOptions& options = {});

/// Strang splitting E_A(tau/2) E_B(tau) E_A(tau/2), closed-form defects.
[[nodiscard]] DefectOutput strang_defect(const problems::SplitNonlinearProblem& prob, double tau,
                                         const ComplexVector& u, DefectKind kind);

/// Symmetrized defect of a general splitting, evaluated alongside the step.
/// The semilinear form transports the defect with e^{a tA}; the nonlinear form
/// uses the derivative of E_A instead.
[[nodiscard]] DefectOutput splitting_defect_semilinear(const integrators::SplittingScheme& scheme,
                                                       const problems::SemilinearProblem& prob,
                                                       double tau, const ComplexVector& u);
[[nodiscard]] DefectOutput splitting_defect_nonlinear(const integrators::SplittingScheme& scheme,
                                                      const problems::SplitNonlinearProblem& prob,
                                                      double tau, const ComplexVector& u);

/// Exact symmetrized defect of the exponential midpoint rule.
[[nodiscard]] DefectOutput expmid_defect_symmetrized(const problems::NonautonomousLinearProblem& prob,
                                                     double t0, double tau,
                                                     const ComplexVector& u);

/// Bcheck_j = sum_k a_jk (c_k - 1/2) A'(t0 + c_k tau), for j = 0..J-1.
[[nodiscard]] ComplexMatrix cfm_bcheck(const integrators::CfmScheme& scheme,
                                       const problems::NonautonomousLinearProblem& prob, double t0,
                                       double tau, std::size_t j);

/// B + sum_{m<p} tau^{m+1}/(m+1)! ad_B^m(Bcheck).
[[nodiscard]] ComplexMatrix gamma_truncated(const ComplexMatrix& b, const ComplexMatrix& bcheck,
                                            double tau, int p);

/// C^{+-} = (B + tau Bcheck)/2 +- (tau^2/12) [B, Bcheck].
struct HermiteTerms {
  ComplexMatrix minus;
  ComplexMatrix plus;
};
[[nodiscard]] HermiteTerms hermite_terms(const ComplexMatrix& b, const ComplexMatrix& bcheck,
                                         double tau);

/// Symmetrized defect of a symmetric CFM scheme.
[[nodiscard]] DefectOutput cfm_defect(const integrators::CfmScheme& scheme,
                                      const problems::NonautonomousLinearProblem& prob, double t0,
                                      double tau, const ComplexVector& u, ExpVariant variant);

/// (d/dtau - 1/2 d/dt0) of the fourth-order Magnus exponent.
[[nodiscard]] ComplexMatrix magnus4_bcheck(const problems::NonautonomousLinearProblem& prob,
                                           double t0, double tau);

[[nodiscard]] DefectOutput magnus4_defect(const problems::NonautonomousLinearProblem& prob,
                                          double t0, double tau, const ComplexVector& u,
                                          ExpVariant variant);

}  // namespace symdefect::defect
