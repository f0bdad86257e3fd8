#include "symdefect/integrators/implicit_midpoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdefect/errors.hpp"

namespace symdefect::integrators {

namespace {

std::vector<double> jacobian_storage(const problems::AutonomousProblem& prob, double tau,
                                     const ComplexVector& m) {
  const std::size_t n = m.size();
  const std::size_t n2 = 2 * n;
  std::vector<double> a(n2 * n2, 0.0);
  ComplexVector e(n);
  for (std::size_t col = 0; col < n2; ++col) {
    e[col / 2] = (col % 2 == 0) ? numkit::Complex(1.0, 0.0) : numkit::Complex(0.0, 1.0);
    const ComplexVector jv = prob.rhs_derivative(m, e);
    if (jv.size() != n) throw DimensionError("implicit midpoint: derivative has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      a[(2 * i) * n2 + col] = -0.5 * tau * jv[i].real();
      a[(2 * i + 1) * n2 + col] = -0.5 * tau * jv[i].imag();
    }
    a[col * n2 + col] += 1.0;
    e[col / 2] = {};
  }
  return a;
}

}  // namespace

MidpointJacobian::MidpointJacobian(const problems::AutonomousProblem& prob, double tau,
                                   const ComplexVector& m)
    : n_(m.size()), lu_(jacobian_storage(prob, tau, m), 2 * m.size()) {}

ComplexVector MidpointJacobian::solve(const ComplexVector& rhs) const {
  if (rhs.size() != n_) throw DimensionError("MidpointJacobian::solve: length mismatch");
  std::vector<double> b(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    b[2 * i] = rhs[i].real();
    b[2 * i + 1] = rhs[i].imag();
  }
  lu_.solve_in_place(b.data(), 1);
  ComplexVector x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = {b[2 * i], b[2 * i + 1]};
  return x;
}

MidpointResult solve_implicit_midpoint(const problems::AutonomousProblem& prob, double tau,
                                       const ComplexVector& u, const NewtonOptions& options) {
  if (u.size() != prob.dim()) throw DimensionError("implicit midpoint: state has wrong length");
  MidpointResult out{u, 0, 0.0};
  if (tau == 0.0) return out;

  const double scale = std::max(1.0, numkit::norm2(u));
  auto residual_of = [&](const ComplexVector& w) {
    ComplexVector m = 0.5 * (u + w);
    ComplexVector r = w - u;
    r.axpy(-tau, prob.rhs(m));
    return std::pair{std::move(r), std::move(m)};
  };

  ComplexVector w = u;
  w.axpy(tau, prob.rhs(u));
  for (int it = 0;; ++it) {
    auto [r, m] = residual_of(w);
    const double res = numkit::norm2(r);
    if (!std::isfinite(res)) throw StepFailure("implicit midpoint: Newton iterate is not finite");
    if (res <= options.tolerance * scale) {
      // One polishing update; keeps roundoff, not the stopping rule, as the floor.
      const MidpointJacobian jac(prob, tau, m);
      ComplexVector polished = w - jac.solve(r);
      const double res2 = numkit::norm2(residual_of(polished).first);
      if (res2 <= res) {
        w = std::move(polished);
        out.residual = res2;
      } else {
        out.residual = res;
      }
      out.w = std::move(w);
      out.iterations = it;
      return out;
    }
    if (it == options.max_iterations) {
      throw StepFailure("implicit midpoint: Newton did not converge in " +
                        std::to_string(options.max_iterations) + " iterations");
    }
    const MidpointJacobian jac(prob, tau, m);
    w -= jac.solve(r);
  }
}

ComplexVector step_implicit_midpoint(const problems::AutonomousProblem& prob, double tau,
                                     const ComplexVector& u, const NewtonOptions& options) {
  return solve_implicit_midpoint(prob, tau, u, options).w;
}

}  // namespace symdefect::integrators
