#include "symdefect/problems/cubic_nls.hpp"

#include <cmath>
#include <numbers>

#include "symdefect/errors.hpp"

namespace symdefect::problems {

namespace {

constexpr Complex kI{0.0, 1.0};

// exp(i theta) u with the product written out in real arithmetic.
Complex rotate(double theta, Complex u) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * u.real() - s * u.imag(), s * u.real() + c * u.imag()};
}

void require_dim(const ComplexVector& u, std::size_t n) {
  if (u.size() != n) throw DimensionError("CubicNls: state length does not match grid");
}

}  // namespace

Complex nls_exact_soliton(double x, double t) {
  return 2.0 * std::polar(1.0, 1.5 * t - x) / std::cosh(2.0 * (t + x));
}

CubicNls::CubicNls(const CubicNlsSpec& spec)
    : spec_(spec), h_((spec.x_max - spec.x_min) / static_cast<double>(spec.points)),
      plan_(spec.points) {
  if (!(spec.x_max > spec.x_min)) throw std::invalid_argument("CubicNls: empty domain");
  const std::size_t n = spec.points;
  const double length = spec.x_max - spec.x_min;
  x_.resize(n);
  kappa_.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    x_[m] = spec.x_min + static_cast<double>(m) * h_;
    const double mode = m < n / 2 ? static_cast<double>(m)
                                  : static_cast<double>(m) - static_cast<double>(n);
    kappa_[m] = 2.0 * std::numbers::pi / length * mode;
  }
}

double CubicNls::norm(const ComplexVector& v) const { return std::sqrt(h_) * numkit::norm2(v); }

ComplexVector CubicNls::apply_linear(const ComplexVector& u) const {
  require_dim(u, dim());
  ComplexVector w = u;
  plan_.forward(w.span());
  for (std::size_t m = 0; m < w.size(); ++m) w[m] *= Complex(0.0, -0.5 * kappa_[m] * kappa_[m]);
  plan_.inverse(w.span());
  return w;
}

ComplexVector CubicNls::flow_linear(double t, const ComplexVector& u) const {
  require_dim(u, dim());
  if (t == 0.0) return u;
  ComplexVector w = u;
  plan_.forward(w.span());
  for (std::size_t m = 0; m < w.size(); ++m) w[m] = rotate(-0.5 * kappa_[m] * kappa_[m] * t, w[m]);
  plan_.inverse(w.span());
  return w;
}

ComplexVector CubicNls::part_b(const ComplexVector& u) const {
  require_dim(u, dim());
  ComplexVector w(u.size());
  for (std::size_t m = 0; m < u.size(); ++m) w[m] = kI * std::norm(u[m]) * u[m];
  return w;
}

ComplexVector CubicNls::part_b_derivative(const ComplexVector& u, const ComplexVector& v) const {
  require_dim(u, dim());
  require_dim(v, dim());
  ComplexVector w(u.size());
  for (std::size_t m = 0; m < u.size(); ++m) {
    const double re = (std::conj(u[m]) * v[m]).real();
    w[m] = kI * (std::norm(u[m]) * v[m] + 2.0 * re * u[m]);
  }
  return w;
}

ComplexVector CubicNls::flow_b(double t, const ComplexVector& u) const {
  require_dim(u, dim());
  if (t == 0.0) return u;
  ComplexVector w(u.size());
  for (std::size_t m = 0; m < u.size(); ++m) w[m] = rotate(t * std::norm(u[m]), u[m]);
  return w;
}

ComplexVector CubicNls::flow_b_derivative(double t, const ComplexVector& u,
                                          const ComplexVector& v) const {
  require_dim(u, dim());
  require_dim(v, dim());
  ComplexVector w(u.size());
  for (std::size_t m = 0; m < u.size(); ++m) {
    const double re = (std::conj(u[m]) * v[m]).real();
    w[m] = rotate(t * std::norm(u[m]), v[m] + Complex(0.0, 2.0 * t * re) * u[m]);
  }
  return w;
}

ComplexVector CubicNls::initial_state() const {
  if (spec_.initial == CubicNlsSpec::Initial::single_soliton) return soliton_on_grid(0.0);
  const auto& p = spec_.two_soliton;
  ComplexVector u(dim());
  for (std::size_t m = 0; m < dim(); ++m) {
    const double x = x_[m];
    u[m] = p.a1 * std::polar(1.0, -p.b1 * x) / std::cosh(p.a1 * (x - p.c1)) +
           p.a2 * std::polar(1.0, -p.b2 * x) / std::cosh(p.a2 * (x - p.c2));
  }
  return u;
}

ComplexVector CubicNls::soliton_on_grid(double t) const {
  ComplexVector u(dim());
  for (std::size_t m = 0; m < dim(); ++m) u[m] = nls_exact_soliton(x_[m], t);
  return u;
}

std::shared_ptr<const CubicNls> nls_build(const CubicNlsSpec& spec) {
  return std::make_shared<const CubicNls>(spec);
}

}  // namespace symdefect::problems
