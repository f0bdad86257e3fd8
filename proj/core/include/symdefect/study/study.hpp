#pragma once

#include <string>
#include <vector>

#include "symdefect/control/adaptive.hpp"
#include "symdefect/control/reference.hpp"
#include "symdefect/control/registry.hpp"

namespace symdefect::study {

using numkit::ComplexVector;

/// One line of a local convergence table. Orders are NaN on the first row.
struct ConvergenceRow {
  double tau = 0.0;
  double err_norm = 0.0;
  double err_order = 0.0;
  double dev_norm = 0.0;
  double dev_order = 0.0;
  bool failed = false;
  std::string message;
};

/// One line of a global error table.
struct GlobalRow {
  double tau = 0.0;
  double global_err = 0.0;
  double global_order = 0.0;
  double corrected_err = 0.0;
  double corrected_order = 0.0;
  bool failed = false;
  std::string message;
};

/// tau_max, tau_max/2, ..., tau_max/2^{levels-1}.
[[nodiscard]] std::vector<double> dyadic_ladder(double tau_max, int levels);

/// log(e_prev/e_cur) / log(tau_prev/tau_cur); NaN if either error is not positive.
[[nodiscard]] double observed_order(double tau_prev, double e_prev, double tau_cur, double e_cur);

struct StudyOptions {
  control::ReferenceOptions reference{};
};

/// For every tau: one step with defect from (t0, u0), L = S - E, deviation
/// |estimator - L|. Rows failing to step are marked failed.
[[nodiscard]] std::vector<ConvergenceRow> run_local_study(const control::ProblemSetup& setup,
                                                          const control::Method& method,
                                                          const std::vector<double>& taus,
                                                          const ComplexVector& u0, double t0,
                                                          const StudyOptions& options = {});

/// Fixed-step integration over [t0, T] of both the basic and the corrected
/// scheme; errors against reference_solve at T. Each tau must divide T - t0.
[[nodiscard]] std::vector<GlobalRow> run_global_study(const control::ProblemSetup& setup,
                                                      const control::Method& method,
                                                      const std::vector<double>& taus,
                                                      const ComplexVector& u0, double t0, double T,
                                                      const StudyOptions& options = {});

[[nodiscard]] control::AdaptiveResult run_adaptive(const control::ProblemSetup& setup,
                                                   const control::Method& method,
                                                   const control::AdaptiveConfig& config, double T);

[[nodiscard]] bool any_failed(const std::vector<ConvergenceRow>& rows);
[[nodiscard]] bool any_failed(const std::vector<GlobalRow>& rows);

}  // namespace symdefect::study
