#pragma once

#include <string>
#include <vector>

#include "symdefect/control/method.hpp"

namespace symdefect::control {

struct AdaptiveConfig {
  double tol = 1e-10;
  double safety = 0.9;
  double ratio_min = 0.25;
  double ratio_max = 4.0;
  double tau_init = 1e-2;
  double tau_min = 1e-8;
  double tau_max = 1.0;
  long max_steps = 1'000'000;

  /// Throws std::invalid_argument unless 0 < ratio_min < 1 < ratio_max,
  /// 0 < tau_min <= tau_init <= tau_max and tol > 0.
  void validate() const;
};

struct TraceEntry {
  double t = 0.0;
  double tau = 0.0;
  double est_norm = 0.0;
  bool accepted = false;
};

enum class AdaptiveStatus { completed, step_too_small, step_failed, budget_exhausted };

struct AdaptiveResult {
  ComplexVector state;
  double t_final = 0.0;
  std::vector<TraceEntry> trace;
  AdaptiveStatus status = AdaptiveStatus::completed;
  std::string message;

  [[nodiscard]] bool ok() const noexcept { return status == AdaptiveStatus::completed; }
  [[nodiscard]] std::vector<TraceEntry> accepted() const;
};

/// tau * clamp(safety (tol/err)^{1/(p+1)}, ratio_min, ratio_max), clamped to
/// [tau_min, tau_max]. err == 0 gives the maximal ratio.
[[nodiscard]] double propose_step_size(double tau, double err, int p, const AdaptiveConfig& cfg);

/// Integrates from t0 to T with the method's symmetrized-defect estimator as
/// local error measure (in the problem norm). Accepted steps propagate the
/// basic approximation; the last step is shortened to land on T exactly.
[[nodiscard]] AdaptiveResult adaptive_integrate(const Method& method, const AdaptiveConfig& cfg,
                                                double t0, double T, const ComplexVector& u0);

[[nodiscard]] std::string_view to_string(AdaptiveStatus s) noexcept;

}  // namespace symdefect::control
