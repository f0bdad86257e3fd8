#include "symdefect/study/study.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace symdefect::study {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename Row, typename Get, typename Set>
void fill_orders(std::vector<Row>& rows, Get get, Set set) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double order = kNaN;
    if (i > 0 && !rows[i].failed && !rows[i - 1].failed) {
      order = observed_order(rows[i - 1].tau, get(rows[i - 1]), rows[i].tau, get(rows[i]));
    }
    set(rows[i], order);
  }
}

long step_count(double span, double tau) {
  const double n = span / tau;
  const double r = std::round(n);
  if (r < 1.0 || std::abs(n - r) > 1e-9 * std::max(1.0, r)) {
    throw std::invalid_argument("global study: tau does not divide the interval");
  }
  return static_cast<long>(r);
}

}  // namespace

std::vector<double> dyadic_ladder(double tau_max, int levels) {
  if (!(tau_max > 0.0) || levels < 1) throw std::invalid_argument("dyadic_ladder: bad arguments");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) out.push_back(std::ldexp(tau_max, -i));
  return out;
}

double observed_order(double tau_prev, double e_prev, double tau_cur, double e_cur) {
  if (!(e_prev > 0.0) || !(e_cur > 0.0) || tau_prev == tau_cur) return kNaN;
  return std::log(e_prev / e_cur) / std::log(tau_prev / tau_cur);
}

std::vector<ConvergenceRow> run_local_study(const control::ProblemSetup& setup,
                                            const control::Method& method,
                                            const std::vector<double>& taus,
                                            const ComplexVector& u0, double t0,
                                            const StudyOptions& options) {
  const auto& prob = method.problem();
  std::vector<ConvergenceRow> rows;
  rows.reserve(taus.size());
  for (double tau : taus) {
    ConvergenceRow row;
    row.tau = tau;
    try {
      const integrators::StepOutput out = method.corrected_step(t0, tau, u0);
      const ComplexVector exact = control::reference_solve(setup, t0, t0 + tau, u0,
                                                           options.reference);
      const ComplexVector err = out.u_next - exact;
      row.err_norm = prob.norm(err);
      row.dev_norm = prob.norm(*out.estimator - err);
    } catch (const std::exception& e) {
      row.failed = true;
      row.message = e.what();
      row.err_norm = row.dev_norm = kNaN;
    }
    rows.push_back(std::move(row));
  }
  fill_orders(rows, [](const ConvergenceRow& r) { return r.err_norm; },
              [](ConvergenceRow& r, double o) { r.err_order = o; });
  fill_orders(rows, [](const ConvergenceRow& r) { return r.dev_norm; },
              [](ConvergenceRow& r, double o) { r.dev_order = o; });
  return rows;
}

std::vector<GlobalRow> run_global_study(const control::ProblemSetup& setup,
                                        const control::Method& method,
                                        const std::vector<double>& taus, const ComplexVector& u0,
                                        double t0, double T, const StudyOptions& options) {
  const auto& prob = method.problem();
  const ComplexVector exact = control::reference_solve(setup, t0, T, u0, options.reference);
  std::vector<GlobalRow> rows;
  rows.reserve(taus.size());
  for (double tau : taus) {
    GlobalRow row;
    row.tau = tau;
    try {
      const long n = step_count(T - t0, tau);
      const double h = (T - t0) / static_cast<double>(n);
      ComplexVector plain = u0;
      ComplexVector corrected = u0;
      for (long i = 0; i < n; ++i) {
        const double t = t0 + static_cast<double>(i) * h;
        plain = method.step(t, h, plain);
        corrected = *method.corrected_step(t, h, corrected).u_corrected;
      }
      row.global_err = prob.norm(plain - exact);
      row.corrected_err = prob.norm(corrected - exact);
    } catch (const std::exception& e) {
      row.failed = true;
      row.message = e.what();
      row.global_err = row.corrected_err = kNaN;
    }
    rows.push_back(std::move(row));
  }
  fill_orders(rows, [](const GlobalRow& r) { return r.global_err; },
              [](GlobalRow& r, double o) { r.global_order = o; });
  fill_orders(rows, [](const GlobalRow& r) { return r.corrected_err; },
              [](GlobalRow& r, double o) { r.corrected_order = o; });
  return rows;
}

control::AdaptiveResult run_adaptive(const control::ProblemSetup& setup,
                                     const control::Method& method,
                                     const control::AdaptiveConfig& config, double T) {
  return control::adaptive_integrate(method, config, setup.t0, T, setup.initial_state);
}

bool any_failed(const std::vector<ConvergenceRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.failed; });
}

bool any_failed(const std::vector<GlobalRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.failed; });
}

}  // namespace symdefect::study
