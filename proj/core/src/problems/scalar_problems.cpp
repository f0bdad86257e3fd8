#include "symdefect/problems/scalar_problems.hpp"

#include <cmath>

#include "symdefect/errors.hpp"

namespace symdefect::problems {

namespace {

using numkit::Complex;

template <typename Fn>
ComplexVector map(const ComplexVector& u, Fn fn) {
  ComplexVector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = fn(u[i]);
  return w;
}

template <typename Fn>
ComplexVector map2(const ComplexVector& u, const ComplexVector& v, Fn fn) {
  if (u.size() != v.size()) throw DimensionError("scalar problem: length mismatch");
  ComplexVector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = fn(u[i], v[i]);
  return w;
}

// 1 - mu t u, rejected when too close to the pole.
Complex pole_factor(double mu, double t, Complex u) {
  const Complex q = 1.0 - mu * t * u;
  if (std::abs(q) < 1e-12 || !std::isfinite(std::abs(q))) {
    throw StepFailure("ToySplit: B-subflow crosses its pole");
  }
  return q;
}

}  // namespace

ComplexVector ToySplit::part_a(const ComplexVector& u) const {
  return map(u, [&](Complex x) { return lambda_ * x; });
}

ComplexVector ToySplit::part_a_derivative(const ComplexVector&, const ComplexVector& v) const {
  return map(v, [&](Complex x) { return lambda_ * x; });
}

ComplexVector ToySplit::flow_a(double t, const ComplexVector& u) const {
  if (t == 0.0) return u;
  const double g = std::exp(lambda_ * t);
  return map(u, [&](Complex x) { return g * x; });
}

ComplexVector ToySplit::flow_a_derivative(double t, const ComplexVector&,
                                          const ComplexVector& v) const {
  return flow_a(t, v);
}

ComplexVector ToySplit::part_b(const ComplexVector& u) const {
  return map(u, [&](Complex x) { return mu_ * x * x; });
}

ComplexVector ToySplit::part_b_derivative(const ComplexVector& u, const ComplexVector& v) const {
  return map2(u, v, [&](Complex x, Complex y) { return 2.0 * mu_ * x * y; });
}

ComplexVector ToySplit::flow_b(double t, const ComplexVector& u) const {
  if (t == 0.0) return u;
  return map(u, [&](Complex x) { return x / pole_factor(mu_, t, x); });
}

ComplexVector ToySplit::flow_b_derivative(double t, const ComplexVector& u,
                                          const ComplexVector& v) const {
  return map2(u, v, [&](Complex x, Complex y) {
    const Complex q = pole_factor(mu_, t, x);
    return y / (q * q);
  });
}

ComplexVector ToySplit::exact_flow(double t, const ComplexVector& u) const {
  if (t == 0.0) return u;
  if (lambda_ == 0.0) {
    return map(u, [&](Complex x) { return x / pole_factor(mu_, t, x); });
  }
  // u(t) = lambda e^{lambda t} u0 / (lambda - mu u0 (e^{lambda t} - 1))
  const double g = std::exp(lambda_ * t);
  const double gm1 = std::expm1(lambda_ * t);
  return map(u, [&](Complex x) {
    const Complex q = lambda_ - mu_ * x * gm1;
    if (std::abs(q) < 1e-300) throw StepFailure("ToySplit: exact solution blows up");
    return lambda_ * g * x / q;
  });
}

std::shared_ptr<const ToySplit> toy_split_build(double lambda, double mu) {
  return std::make_shared<const ToySplit>(lambda, mu);
}

ComplexVector QuadraticDecay::rhs(const ComplexVector& u) const {
  return map(u, [](Complex x) { return -x * x; });
}

ComplexVector QuadraticDecay::rhs_derivative(const ComplexVector& u, const ComplexVector& v) const {
  return map2(u, v, [](Complex x, Complex y) { return -2.0 * x * y; });
}

ComplexVector QuadraticDecay::exact_flow(double t, const ComplexVector& u) const {
  return map(u, [&](Complex x) { return x / (1.0 + t * x); });
}

}  // namespace symdefect::problems
