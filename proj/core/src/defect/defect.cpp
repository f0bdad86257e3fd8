#include "symdefect/defect/defect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "symdefect/errors.hpp"
#include "symdefect/integrators/steppers.hpp"
#include "symdefect/numkit/expm.hpp"

namespace symdefect::defect {

namespace {

DefectOutput trivial(const ComplexVector& u) { return {u, ComplexVector(u.size())}; }

void check_state(const problems::EvolutionProblem& prob, const ComplexVector& u) {
  if (u.size() != prob.dim()) throw DimensionError("defect: state has wrong length");
}

void check_splitting(const integrators::SplittingScheme& scheme) {
  if (scheme.a.size() != scheme.b.size() || scheme.a.size() < 2) {
    throw std::invalid_argument("splitting defect: need J >= 2 paired coefficients");
  }
  if (scheme.b.back() != 0.0) {
    throw std::invalid_argument("splitting defect: trailing b coefficient must be 0");
  }
}

// Shared body of both splitting algorithms; Transport(s, u, d) moves d along
// the A-flow of duration s starting from u.
template <typename Transport>
DefectOutput splitting_defect_impl(const integrators::SplittingScheme& scheme,
                                   const problems::SplitNonlinearProblem& prob, double tau,
                                   const ComplexVector& u0, Transport&& transport_a) {
  check_state(prob, u0);
  check_splitting(scheme);
  if (tau == 0.0) return trivial(u0);

  const std::size_t jj = scheme.stages();
  ComplexVector u = u0;
  ComplexVector d = -0.5 * prob.part_b(u);
  auto a_stage = [&](std::size_t j, double weight) {
    d.axpy(weight, prob.part_a(u));
    if (scheme.a[j] != 0.0) {
      const double s = scheme.a[j] * tau;
      d = transport_a(s, u, d);
      u = prob.flow_a(s, u);
    }
  };
  for (std::size_t j = 0; j + 1 < jj; ++j) {
    a_stage(j, j == 0 ? scheme.a[j] - 0.5 : scheme.a[j]);
    if (scheme.b[j] != 0.0) {
      const double s = scheme.b[j] * tau;
      d.axpy(scheme.b[j], prob.part_b(u));
      d = prob.flow_b_derivative(s, u, d);
      u = prob.flow_b(s, u);
    }
  }
  a_stage(jj - 1, scheme.a[jj - 1] - 0.5);
  d.axpy(-0.5, prob.part_b(u));
  return {std::move(u), std::move(d)};
}

}  // namespace

DefectKind parse_defect_kind(std::string_view s) {
  if (s == "classical") return DefectKind::classical;
  if (s == "symmetrized") return DefectKind::symmetrized;
  throw std::invalid_argument("unknown defect kind '" + std::string(s) + "'");
}

ExpVariant parse_exp_variant(std::string_view s) {
  if (s == "taylor") return ExpVariant::taylor;
  if (s == "hermite") return ExpVariant::hermite;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

std::string_view to_string(DefectKind k) noexcept {
  return k == DefectKind::classical ? "classical" : "symmetrized";
}

std::string_view to_string(ExpVariant v) noexcept {
  return v == ExpVariant::taylor ? "taylor" : "hermite";
}

DefectOutput imr_defect(const problems::AutonomousProblem& prob, double tau,
                        const ComplexVector& u, DefectKind kind,
                        const integrators::NewtonOptions& options) {
  check_state(prob, u);
  if (tau == 0.0) return trivial(u);
  ComplexVector w = integrators::solve_implicit_midpoint(prob, tau, u, options).w;
  const ComplexVector m = 0.5 * (u + w);
  const integrators::MidpointJacobian jac(prob, tau, m);
  const ComplexVector fm = prob.rhs(m);
  const ComplexVector fw = prob.rhs(w);

  ComplexVector d;
  if (kind == DefectKind::classical) {
    d = jac.solve(fm) - fw;
  } else {
    const ComplexVector fu = prob.rhs(u);
    ComplexVector rhs = fm;
    rhs.axpy(-0.5, fu);
    rhs.axpy(-0.25 * tau, prob.rhs_derivative(m, fu));
    d = jac.solve(rhs);
    d.axpy(-0.5, fw);
  }
  return {std::move(w), std::move(d)};
}

DefectOutput strang_defect(const problems::SplitNonlinearProblem& prob, double tau,
                           const ComplexVector& u, DefectKind kind) {
  check_state(prob, u);
  if (tau == 0.0) return trivial(u);
  const double half = 0.5 * tau;
  const ComplexVector v1 = prob.flow_a(half, u);
  const ComplexVector v2 = prob.flow_b(tau, v1);
  ComplexVector w = prob.flow_a(half, v2);

  ComplexVector inner = prob.part_b(v2);
  ComplexVector d;
  if (kind == DefectKind::classical) {
    inner.axpy(0.5, prob.flow_b_derivative(tau, v1, prob.part_a(v1)));
    d = prob.flow_a_derivative(half, v2, inner);
    d.axpy(-0.5, prob.part_a(w));
    d -= prob.part_b(w);
  } else {
    const ComplexVector moved = prob.flow_a_derivative(half, u, prob.part_b(u));
    inner.axpy(-0.5, prob.flow_b_derivative(tau, v1, moved));
    d = prob.flow_a_derivative(half, v2, inner);
    d.axpy(-0.5, prob.part_b(w));
  }
  return {std::move(w), std::move(d)};
}

DefectOutput splitting_defect_semilinear(const integrators::SplittingScheme& scheme,
                                         const problems::SemilinearProblem& prob, double tau,
                                         const ComplexVector& u) {
  return splitting_defect_impl(scheme, prob, tau, u,
                               [&](double s, const ComplexVector&, const ComplexVector& d) {
                                 return prob.flow_linear(s, d);
                               });
}

DefectOutput splitting_defect_nonlinear(const integrators::SplittingScheme& scheme,
                                        const problems::SplitNonlinearProblem& prob, double tau,
                                        const ComplexVector& u) {
  return splitting_defect_impl(scheme, prob, tau, u,
                               [&](double s, const ComplexVector& at, const ComplexVector& d) {
                                 return prob.flow_a_derivative(s, at, d);
                               });
}

DefectOutput expmid_defect_symmetrized(const problems::NonautonomousLinearProblem& prob,
                                       double t0, double tau, const ComplexVector& u) {
  check_state(prob, u);
  if (tau == 0.0) return trivial(u);
  const ComplexMatrix s = integrators::exp_midpoint_propagator(prob, t0, tau);
  ComplexVector w = s * u;
  ComplexMatrix left = prob.matrix(t0 + 0.5 * tau);
  left.axpy(-0.5, prob.matrix(t0 + tau));
  ComplexVector d = left * w;
  d.axpy(-0.5, s * (prob.matrix(t0) * u));
  return {std::move(w), std::move(d)};
}

ComplexMatrix cfm_bcheck(const integrators::CfmScheme& scheme,
                         const problems::NonautonomousLinearProblem& prob, double t0, double tau,
                         std::size_t j) {
  if (j >= scheme.exponentials()) throw std::out_of_range("cfm_bcheck: stage index out of range");
  ComplexMatrix out(prob.dim(), prob.dim());
  for (std::size_t k = 0; k < scheme.node_count(); ++k) {
    const double w = scheme.weight(j, k) * (scheme.nodes[k] - 0.5);
    if (w != 0.0) out.axpy(w, prob.matrix_derivative(t0 + scheme.nodes[k] * tau));
  }
  return out;
}

ComplexMatrix gamma_truncated(const ComplexMatrix& b, const ComplexMatrix& bcheck, double tau,
                              int p) {
  ComplexMatrix out = b;
  ComplexMatrix term = bcheck;  // ad_B^m(Bcheck)
  double coeff = 1.0;           // tau^{m+1}/(m+1)!
  for (int m = 0; m < p; ++m) {
    if (m > 0) term = numkit::commutator(b, term);
    coeff *= tau / static_cast<double>(m + 1);
    out.axpy(coeff, term);
  }
  return out;
}

HermiteTerms hermite_terms(const ComplexMatrix& b, const ComplexMatrix& bcheck, double tau) {
  ComplexMatrix mid = 0.5 * b;
  mid.axpy(0.5 * tau, bcheck);
  const ComplexMatrix corr = (tau * tau / 12.0) * numkit::commutator(b, bcheck);
  return {mid - corr, mid + corr};
}

DefectOutput cfm_defect(const integrators::CfmScheme& scheme,
                        const problems::NonautonomousLinearProblem& prob, double t0, double tau,
                        const ComplexVector& u0, ExpVariant variant) {
  check_state(prob, u0);
  if (tau == 0.0) return trivial(u0);
  const std::vector<ComplexMatrix> bs = integrators::cfm_exponents(scheme, prob, t0, tau);

  ComplexVector u = u0;
  ComplexVector d = -0.5 * (prob.matrix(t0) * u);
  for (std::size_t j = 0; j < bs.size(); ++j) {
    const ComplexMatrix bcheck = cfm_bcheck(scheme, prob, t0, tau, j);
    const ComplexMatrix e = numkit::expm(tau * bs[j]);
    if (variant == ExpVariant::taylor) {
      u = e * u;
      d = e * d;
      d += gamma_truncated(bs[j], bcheck, tau, scheme.order) * u;
    } else {
      const HermiteTerms c = hermite_terms(bs[j], bcheck, tau);
      d += c.minus * u;
      u = e * u;
      d = e * d;
      d += c.plus * u;
    }
  }
  d.axpy(-0.5, prob.matrix(t0 + tau) * u);
  return {std::move(u), std::move(d)};
}

ComplexMatrix magnus4_bcheck(const problems::NonautonomousLinearProblem& prob, double t0,
                             double tau) {
  using integrators::magnus4_c1;
  using integrators::magnus4_c2;
  const double r = std::sqrt(3.0) / 12.0;
  const ComplexMatrix a1 = prob.matrix(t0 + magnus4_c1 * tau);
  const ComplexMatrix a2 = prob.matrix(t0 + magnus4_c2 * tau);
  const ComplexMatrix da1 = prob.matrix_derivative(t0 + magnus4_c1 * tau);
  const ComplexMatrix da2 = prob.matrix_derivative(t0 + magnus4_c2 * tau);

  ComplexMatrix out = (0.5 * (magnus4_c1 - 0.5)) * da1;
  out.axpy(0.5 * (magnus4_c2 - 0.5), da2);
  out.axpy(-r, numkit::commutator(a1, a2));
  out.axpy(-r * (magnus4_c1 - 0.5) * tau, numkit::commutator(da1, a2));
  out.axpy(-r * (magnus4_c2 - 0.5) * tau, numkit::commutator(a1, da2));
  return out;
}

DefectOutput magnus4_defect(const problems::NonautonomousLinearProblem& prob, double t0,
                            double tau, const ComplexVector& u, ExpVariant variant) {
  check_state(prob, u);
  if (tau == 0.0) return trivial(u);
  const ComplexMatrix b = integrators::magnus4_exponent(prob, t0, tau);
  const ComplexMatrix bcheck = magnus4_bcheck(prob, t0, tau);
  const ComplexMatrix s = numkit::expm(tau * b);
  ComplexVector w = s * u;
  const ComplexMatrix a_end = prob.matrix(t0 + tau);
  const ComplexMatrix a_start = prob.matrix(t0);

  ComplexVector d;
  if (variant == ExpVariant::taylor) {
    ComplexMatrix left = gamma_truncated(b, bcheck, tau, 4);
    left.axpy(-0.5, a_end);
    d = left * w;
    d.axpy(-0.5, s * (a_start * u));
  } else {
    HermiteTerms c = hermite_terms(b, bcheck, tau);
    c.plus.axpy(-0.5, a_end);
    c.minus.axpy(-0.5, a_start);
    d = c.plus * w;
    d += s * (c.minus * u);
  }
  return {std::move(w), std::move(d)};
}

}  // namespace symdefect::defect
