#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "symdefect/numkit/expm.hpp"
#include "symdefect/numkit/linalg.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace testing_support {

using symdefect::numkit::Complex;
using symdefect::numkit::ComplexMatrix;
using symdefect::numkit::ComplexVector;

inline ComplexVector random_vector(std::mt19937& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexVector v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

inline ComplexMatrix random_matrix(std::mt19937& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_skew_hermitian(std::mt19937& rng, std::size_t n, double scale = 1.0) {
  const ComplexMatrix m = random_matrix(rng, n, scale);
  return 0.5 * (m - m.adjoint());
}

/// Least-squares slope of log(err) against log(h).
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
  const std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double pair_order(double h1, double e1, double h2, double e2) {
  return std::log(e1 / e2) / std::log(h1 / h2);
}

/// Classical RK4 with n equal steps. Kept apart from the library so that it
/// can serve as an independent reference.
inline ComplexVector rk4(const std::function<ComplexVector(const ComplexVector&)>& f,
                         const ComplexVector& u0, double t, long n) {
  const double h = t / static_cast<double>(n);
  ComplexVector u = u0;
  for (long i = 0; i < n; ++i) {
    const ComplexVector k1 = f(u);
    const ComplexVector k2 = f(u + (0.5 * h) * k1);
    const ComplexVector k3 = f(u + (0.5 * h) * k2);
    const ComplexVector k4 = f(u + h * k3);
    u.axpy(h / 6.0, k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

/// Central difference error |df(x)v - (f(x+eps v) - f(x-eps v))/(2eps)| for
/// a sequence of eps; returns the observed slope.
inline double central_difference_slope(
    const std::function<ComplexVector(double)>& along, const ComplexVector& derivative,
    const std::vector<double>& eps) {
  std::vector<double> err;
  for (double e : eps) {
    const ComplexVector fd = (1.0 / (2.0 * e)) * (along(e) - along(-e));
    err.push_back(symdefect::numkit::norm2(fd - derivative));
  }
  return loglog_slope(eps, err);
}

/// u' = A u with a constant matrix.
class ConstantLinear final : public symdefect::problems::NonautonomousLinearProblem {
 public:
  explicit ConstantLinear(ComplexMatrix a) : a_(std::move(a)) {}
  std::size_t dim() const override { return a_.rows(); }
  ComplexMatrix matrix(double) const override { return a_; }
  ComplexMatrix matrix_derivative(double) const override {
    return ComplexMatrix(a_.rows(), a_.cols());
  }

 private:
  ComplexMatrix a_;
};

/// Small time-dependent linear problem A(t) = A0 + sin(t) A1 + t^2 A2.
class SmoothLinear final : public symdefect::problems::NonautonomousLinearProblem {
 public:
  SmoothLinear(ComplexMatrix a0, ComplexMatrix a1, ComplexMatrix a2)
      : a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)) {}
  std::size_t dim() const override { return a0_.rows(); }
  ComplexMatrix matrix(double t) const override {
    ComplexMatrix m = a0_;
    m.axpy(std::sin(t), a1_);
    m.axpy(t * t, a2_);
    return m;
  }
  ComplexMatrix matrix_derivative(double t) const override {
    ComplexMatrix m = std::cos(t) * a1_;
    m.axpy(2.0 * t, a2_);
    return m;
  }

 private:
  ComplexMatrix a0_, a1_, a2_;
};

/// Semilinear problem u' = M u + B(u) with a dense M (B pluggable).
class DenseSemilinear final : public symdefect::problems::SemilinearProblem {
 public:
  using Map = std::function<ComplexVector(const ComplexVector&)>;
  using Flow = std::function<ComplexVector(double, const ComplexVector&)>;
  using FlowDerivative =
      std::function<ComplexVector(double, const ComplexVector&, const ComplexVector&)>;
  using Derivative = std::function<ComplexVector(const ComplexVector&, const ComplexVector&)>;

  DenseSemilinear(ComplexMatrix m, Map b, Derivative db, Flow eb, FlowDerivative deb)
      : m_(std::move(m)), b_(std::move(b)), db_(std::move(db)), eb_(std::move(eb)),
        deb_(std::move(deb)) {}

  /// B == 0.
  static DenseSemilinear linear_only(ComplexMatrix m) {
    const std::size_t n = m.rows();
    return DenseSemilinear(
        std::move(m), [n](const ComplexVector&) { return ComplexVector(n); },
        [n](const ComplexVector&, const ComplexVector&) { return ComplexVector(n); },
        [](double, const ComplexVector& u) { return u; },
        [](double, const ComplexVector&, const ComplexVector& v) { return v; });
  }

  std::size_t dim() const override { return m_.rows(); }
  ComplexVector apply_linear(const ComplexVector& u) const override { return m_ * u; }
  ComplexVector flow_linear(double t, const ComplexVector& u) const override {
    return symdefect::numkit::expm(t * m_) * u;
  }
  ComplexVector part_b(const ComplexVector& u) const override { return b_(u); }
  ComplexVector part_b_derivative(const ComplexVector& u, const ComplexVector& v) const override {
    return db_(u, v);
  }
  ComplexVector flow_b(double t, const ComplexVector& u) const override { return eb_(t, u); }
  ComplexVector flow_b_derivative(double t, const ComplexVector& u,
                                  const ComplexVector& v) const override {
    return deb_(t, u, v);
  }

 private:
  ComplexMatrix m_;
  Map b_;
  Derivative db_;
  Flow eb_;
  FlowDerivative deb_;
};

/// Split problem identical to a SemilinearProblem but exposing only the
/// generic nonlinear interface, so the nonlinear code paths get exercised.
class AsNonlinear final : public symdefect::problems::SplitNonlinearProblem {
 public:
  explicit AsNonlinear(const symdefect::problems::SplitNonlinearProblem& p) : p_(p) {}
  std::size_t dim() const override { return p_.dim(); }
  double norm(const ComplexVector& v) const override { return p_.norm(v); }
  ComplexVector part_a(const ComplexVector& u) const override { return p_.part_a(u); }
  ComplexVector part_a_derivative(const ComplexVector& u, const ComplexVector& v) const override {
    return p_.part_a_derivative(u, v);
  }
  ComplexVector flow_a(double t, const ComplexVector& u) const override { return p_.flow_a(t, u); }
  ComplexVector flow_a_derivative(double t, const ComplexVector& u,
                                  const ComplexVector& v) const override {
    return p_.flow_a_derivative(t, u, v);
  }
  ComplexVector part_b(const ComplexVector& u) const override { return p_.part_b(u); }
  ComplexVector part_b_derivative(const ComplexVector& u, const ComplexVector& v) const override {
    return p_.part_b_derivative(u, v);
  }
  ComplexVector flow_b(double t, const ComplexVector& u) const override { return p_.flow_b(t, u); }
  ComplexVector flow_b_derivative(double t, const ComplexVector& u,
                                  const ComplexVector& v) const override {
    return p_.flow_b_derivative(t, u, v);
  }

 private:
  const symdefect::problems::SplitNonlinearProblem& p_;
};

}  // namespace testing_support
