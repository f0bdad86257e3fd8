#include "symdefect/control/adaptive.hpp"

#include <algorithm>
#include <iterator>
#include <cmath>
#include <stdexcept>

#include "symdefect/errors.hpp"

namespace symdefect::control {

void AdaptiveConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("adaptive: tol must be positive");
  if (!(ratio_min > 0.0 && ratio_min < 1.0 && ratio_max > 1.0)) {
    throw std::invalid_argument("adaptive: need 0 < ratio_min < 1 < ratio_max");
  }
  if (!(safety > 0.0 && safety <= 1.0)) throw std::invalid_argument("adaptive: safety in (0, 1]");
  if (!(tau_min > 0.0 && tau_min <= tau_init && tau_init <= tau_max)) {
    throw std::invalid_argument("adaptive: need 0 < tau_min <= tau_init <= tau_max");
  }
}

std::vector<TraceEntry> AdaptiveResult::accepted() const {
  std::vector<TraceEntry> out;
  std::copy_if(trace.begin(), trace.end(), std::back_inserter(out),
               [](const TraceEntry& e) { return e.accepted; });
  return out;
}

double propose_step_size(double tau, double err, int p, const AdaptiveConfig& cfg) {
  double ratio = cfg.ratio_max;
  if (err > 0.0) {
    ratio = cfg.safety * std::pow(cfg.tol / err, 1.0 / static_cast<double>(p + 1));
    ratio = std::clamp(ratio, cfg.ratio_min, cfg.ratio_max);
  }
  return std::clamp(tau * ratio, cfg.tau_min, cfg.tau_max);
}

std::string_view to_string(AdaptiveStatus s) noexcept {
  switch (s) {
    case AdaptiveStatus::completed: return "completed";
    case AdaptiveStatus::step_too_small: return "step_too_small";
    case AdaptiveStatus::step_failed: return "step_failed";
    case AdaptiveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

AdaptiveResult adaptive_integrate(const Method& method, const AdaptiveConfig& cfg, double t0,
                                  double T, const ComplexVector& u0) {
  cfg.validate();
  if (T < t0) throw std::invalid_argument("adaptive: T must not precede t0");
  AdaptiveResult res;
  res.state = u0;
  res.t_final = t0;

  double t = t0;
  double tau = cfg.tau_init;
  const double end_slack = 1e-13 * std::max(1.0, std::abs(T));
  long attempts = 0;
  while (t < T) {
    if (++attempts > cfg.max_steps) {
      res.status = AdaptiveStatus::budget_exhausted;
      res.message = "step budget exhausted";
      break;
    }
    bool last = false;
    double h = tau;
    if (t + h >= T - end_slack) {
      h = T - t;
      last = true;
    }
    integrators::StepOutput out;
    try {
      out = method.corrected_step(t, h, res.state);
    } catch (const StepFailure& e) {
      res.status = AdaptiveStatus::step_failed;
      res.message = e.what();
      break;
    }
    const double err = method.problem().norm(*out.estimator);
    const bool accept = std::isfinite(err) && err <= cfg.tol;
    res.trace.push_back({t, h, err, accept});
    const double proposal = std::isfinite(err) ? propose_step_size(h, err, method.order(), cfg)
                                               : std::max(cfg.tau_min, h * cfg.ratio_min);
    if (accept) {
      res.state = std::move(out.u_next);
      t = last ? T : t + h;
      // A shortened final step says nothing about the next step size.
      tau = last ? tau : proposal;
    } else {
      if (h <= cfg.tau_min) {
        res.status = AdaptiveStatus::step_too_small;
        res.message = "local error above tol at the minimal step size";
        break;
      }
      tau = std::min(proposal, h * cfg.ratio_max);
      if (tau >= h) tau = std::max(cfg.tau_min, h * cfg.ratio_min);
    }
  }
  res.t_final = t;
  return res;
}

}  // namespace symdefect::control
