#include "symdefect/control/oracle.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "symdefect/errors.hpp"

namespace symdefect::control {

FlowWithDerivative variational_flow(const problems::AutonomousProblem& prob, double t,
                                    const ComplexVector& u, const ComplexVector& v,
                                    double max_step) {
  FlowWithDerivative out{u, v};
  if (t == 0.0) return out;
  const long n = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / max_step)));
  const double h = t / static_cast<double>(n);
  ComplexVector& y = out.value;
  ComplexVector& z = out.derivative;
  for (long i = 0; i < n; ++i) {
    const ComplexVector k1 = prob.rhs(y);
    const ComplexVector l1 = prob.rhs_derivative(y, z);
    const ComplexVector y2 = y + (0.5 * h) * k1;
    const ComplexVector z2 = z + (0.5 * h) * l1;
    const ComplexVector k2 = prob.rhs(y2);
    const ComplexVector l2 = prob.rhs_derivative(y2, z2);
    const ComplexVector y3 = y + (0.5 * h) * k2;
    const ComplexVector z3 = z + (0.5 * h) * l2;
    const ComplexVector k3 = prob.rhs(y3);
    const ComplexVector l3 = prob.rhs_derivative(y3, z3);
    const ComplexVector y4 = y + h * k3;
    const ComplexVector z4 = z + h * l3;
    const ComplexVector k4 = prob.rhs(y4);
    const ComplexVector l4 = prob.rhs_derivative(y4, z4);
    y.axpy(h / 6.0, k1 + 2.0 * k2 + 2.0 * k3 + k4);
    z.axpy(h / 6.0, l1 + 2.0 * l2 + 2.0 * l3 + l4);
  }
  return out;
}

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half) with Kronrod and Gauss weights.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  ComplexVector value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<ComplexVector(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const ComplexVector fc = f(c);
  ComplexVector kron = kWk[7] * fc;
  ComplexVector gauss = kWg[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const ComplexVector sum = f(c - h * kXk[i]) + f(c + h * kXk[i]);
    kron.axpy(kWk[i], sum);
    if (i % 2 == 1) gauss.axpy(kWg[i / 2], sum);
  }
  kron *= h;
  gauss *= h;
  const double err = numkit::norm2(kron - gauss);
  return {a, b, std::move(kron), err};
}

}  // namespace

ComplexVector integrate_gk15(const std::function<ComplexVector(double)>& f, double a, double b,
                             double abs_tol, int max_intervals) {
  std::priority_queue<Panel> panels;
  Panel first = gk15(f, a, b);
  double total_err = first.error;
  panels.push(std::move(first));
  int count = 1;
  while (total_err > abs_tol) {
    if (count >= max_intervals) {
      throw ConvergenceError("integrate_gk15: interval budget exhausted");
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    panels.push(std::move(left));
    panels.push(std::move(right));
    ++count;
    // Recompute to avoid drift in the running sum.
    if (count % 64 == 0) {
      std::priority_queue<Panel> copy = panels;
      total_err = 0.0;
      while (!copy.empty()) {
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  ComplexVector sum(panels.top().value.size());
  while (!panels.empty()) {
    sum += panels.top().value;
    panels.pop();
  }
  return sum;
}

ComplexVector local_error_integral_oracle(const problems::AutonomousProblem& prob,
                                          const DefectEvaluator& scheme, double tau,
                                          const ComplexVector& u0, defect::DefectKind kind,
                                          const OracleOptions& options) {
  if (prob.dim() > 4) throw DimensionError("integral oracle: problem dimension exceeds 4");
  if (u0.size() != prob.dim()) throw DimensionError("integral oracle: state has wrong length");
  if (tau == 0.0) return ComplexVector(u0.size());

  std::function<ComplexVector(double)> integrand;
  if (kind == defect::DefectKind::classical) {
    integrand = [&](double s) {
      const defect::DefectOutput sd = scheme(s, u0, kind);
      return variational_flow(prob, tau - s, sd.u_next, sd.d, options.flow_step).derivative;
    };
  } else {
    integrand = [&](double s) {
      const double half = 0.5 * (tau - s);
      const ComplexVector x =
          variational_flow(prob, half, u0, ComplexVector(u0.size()), options.flow_step).value;
      const defect::DefectOutput sd = scheme(s, x, kind);
      return variational_flow(prob, half, sd.u_next, sd.d, options.flow_step).derivative;
    };
  }
  const double lo = std::min(0.0, tau);
  const double hi = std::max(0.0, tau);
  ComplexVector r = integrate_gk15(integrand, lo, hi, options.quadrature_tol);
  if (tau < 0.0) r *= -1.0;
  return r;
}

}  // namespace symdefect::control
