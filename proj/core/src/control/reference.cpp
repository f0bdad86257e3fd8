#include "symdefect/control/reference.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "symdefect/errors.hpp"

namespace symdefect::control {

ComplexVector integrate_corrected(const Method& method, double t0, double T,
                                  const ComplexVector& u0, long n) {
  if (n <= 0) throw std::invalid_argument("integrate_corrected: need at least one step");
  const double tau = (T - t0) / static_cast<double>(n);
  ComplexVector u = u0;
  for (long i = 0; i < n; ++i) {
    const double t = t0 + static_cast<double>(i) * tau;
    u = *method.corrected_step(t, tau, u).u_corrected;
  }
  return u;
}

ComplexVector reference_solve(const ProblemSetup& setup, double t0, double T,
                              const ComplexVector& u0, const ReferenceOptions& options,
                              const Method* via) {
  if (T == t0) return u0;
  if (!via) {
    if (setup.exact_flow) return setup.exact_flow(t0, T, u0);
    if (setup.exact_trajectory && setup.exact_trajectory(t0) == u0) {
      return setup.exact_trajectory(T);
    }
  }
  std::optional<Method> owned;
  if (!via) {
    const defect::ExpVariant variant = defect::parse_exp_variant(setup.reference_variant);
    owned.emplace(make_method(setup, setup.reference_scheme, defect::DefectKind::symmetrized,
                              variant));
    via = &*owned;
  }
  const auto& prob = via->problem();
  ComplexVector coarse = integrate_corrected(*via, t0, T, u0, 1);
  long n = 1;
  for (int level = 1; level <= options.max_levels; ++level) {
    n *= 2;
    ComplexVector fine = integrate_corrected(*via, t0, T, u0, n);
    if (prob.norm(fine - coarse) < options.tol) return fine;
    coarse = std::move(fine);
  }
  throw ConvergenceError("reference_solve: no convergence after " +
                         std::to_string(options.max_levels) + " halvings");
}

}  // namespace symdefect::control
