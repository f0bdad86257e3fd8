#include "symdefect/integrators/steppers.hpp"

#include <cmath>
#include <stdexcept>

#include "symdefect/errors.hpp"
#include "symdefect/numkit/expm.hpp"

namespace symdefect::integrators {

namespace {

void check_state(const problems::EvolutionProblem& prob, const ComplexVector& u) {
  if (u.size() != prob.dim()) throw DimensionError("stepper: state has wrong length");
}

}  // namespace

ComplexVector step_splitting(const SplittingScheme& scheme,
                             const problems::SplitNonlinearProblem& prob, double tau,
                             const ComplexVector& u) {
  check_state(prob, u);
  if (scheme.a.size() != scheme.b.size()) throw std::invalid_argument("splitting: malformed tableau");
  ComplexVector v = u;
  if (tau == 0.0) return v;
  for (std::size_t j = 0; j < scheme.stages(); ++j) {
    if (scheme.a[j] != 0.0) v = prob.flow_a(scheme.a[j] * tau, v);
    if (scheme.b[j] != 0.0) v = prob.flow_b(scheme.b[j] * tau, v);
  }
  return v;
}

ComplexMatrix exp_midpoint_propagator(const problems::NonautonomousLinearProblem& prob,
                                      double t0, double tau) {
  return numkit::expm(tau * prob.matrix(t0 + 0.5 * tau));
}

ComplexVector step_exp_midpoint(const problems::NonautonomousLinearProblem& prob, double t0,
                                double tau, const ComplexVector& u) {
  check_state(prob, u);
  if (tau == 0.0) return u;
  return exp_midpoint_propagator(prob, t0, tau) * u;
}

std::vector<ComplexMatrix> cfm_exponents(const CfmScheme& scheme,
                                         const problems::NonautonomousLinearProblem& prob,
                                         double t0, double tau) {
  scheme.validate();
  const std::size_t kk = scheme.node_count();
  std::vector<ComplexMatrix> samples;
  samples.reserve(kk);
  for (double c : scheme.nodes) samples.push_back(prob.matrix(t0 + c * tau));
  std::vector<ComplexMatrix> out;
  out.reserve(scheme.exponentials());
  for (std::size_t j = 0; j < scheme.exponentials(); ++j) {
    ComplexMatrix bj(prob.dim(), prob.dim());
    for (std::size_t k = 0; k < kk; ++k) bj.axpy(scheme.weight(j, k), samples[k]);
    out.push_back(std::move(bj));
  }
  return out;
}

ComplexVector step_cfm(const CfmScheme& scheme, const problems::NonautonomousLinearProblem& prob,
                       double t0, double tau, const ComplexVector& u) {
  check_state(prob, u);
  if (tau == 0.0) return u;
  ComplexVector v = u;
  for (const ComplexMatrix& bj : cfm_exponents(scheme, prob, t0, tau)) {
    v = numkit::expm(tau * bj) * v;
  }
  return v;
}

ComplexMatrix magnus4_exponent(const problems::NonautonomousLinearProblem& prob, double t0,
                               double tau) {
  const ComplexMatrix a1 = prob.matrix(t0 + magnus4_c1 * tau);
  const ComplexMatrix a2 = prob.matrix(t0 + magnus4_c2 * tau);
  ComplexMatrix b = 0.5 * (a1 + a2);
  b.axpy(-std::sqrt(3.0) / 12.0 * tau, numkit::commutator(a1, a2));
  return b;
}

ComplexVector step_magnus4(const problems::NonautonomousLinearProblem& prob, double t0,
                           double tau, const ComplexVector& u) {
  check_state(prob, u);
  if (tau == 0.0) return u;
  return numkit::expm(tau * magnus4_exponent(prob, t0, tau)) * u;
}

}  // namespace symdefect::integrators
