#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "symdefect/numkit/fft.hpp"
#include "symdefect/problems/interfaces.hpp"

namespace symdefect::problems {

using numkit::Complex;

/// Parameters of a two-soliton initial condition
///   psi(x, 0) = sum_j a_j exp(-i b_j x) / cosh(a_j (x - c_j)).
struct TwoSolitonParams {
  double a1 = 2.0;
  double a2 = 2.0;
  double b1 = 1.0;
  double b2 = -3.0;
  double c1 = 5.0;
  double c2 = -5.0;
};

struct CubicNlsSpec {
  enum class Initial { single_soliton, two_soliton };

  double x_min = -16.0;
  double x_max = 16.0;
  std::size_t points = 512;
  Initial initial = Initial::single_soliton;
  TwoSolitonParams two_soliton{};
};

/// Closed-form soliton 2 exp(i(3t/2 - x)) sech(2(t + x)) of
/// i psi_t = -psi_xx / 2 - |psi|^2 psi.
[[nodiscard]] Complex nls_exact_soliton(double x, double t);

/// Fourier (periodic) spectral collocation of the cubic NLS,
///   A psi ~ (i/2) psi_xx  (diagonal in Fourier space),
///   B(psi) = i |psi|^2 psi (pointwise, exactly integrable).
/// Errors are measured in the grid L2 norm sqrt(h * sum |u_m|^2).
class CubicNls final : public SemilinearProblem {
 public:
  explicit CubicNls(const CubicNlsSpec& spec);

  [[nodiscard]] std::size_t dim() const override { return spec_.points; }
  [[nodiscard]] double norm(const ComplexVector& v) const override;

  [[nodiscard]] ComplexVector apply_linear(const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector flow_linear(double t, const ComplexVector& u) const override;

  [[nodiscard]] ComplexVector part_b(const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector part_b_derivative(const ComplexVector& u,
                                                const ComplexVector& v) const override;
  [[nodiscard]] ComplexVector flow_b(double t, const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector flow_b_derivative(double t, const ComplexVector& u,
                                                const ComplexVector& v) const override;

  [[nodiscard]] const CubicNlsSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] double grid_spacing() const noexcept { return h_; }
  [[nodiscard]] const std::vector<double>& grid() const noexcept { return x_; }
  /// FFT layout [0 .. n/2-1, -n/2 .. -1] scaled by 2 pi / (x_max - x_min).
  [[nodiscard]] const std::vector<double>& wavenumbers() const noexcept { return kappa_; }

  [[nodiscard]] ComplexVector initial_state() const;
  /// Single-soliton solution sampled on the grid at time t.
  [[nodiscard]] ComplexVector soliton_on_grid(double t) const;

 private:
  CubicNlsSpec spec_;
  double h_;
  std::vector<double> x_;
  std::vector<double> kappa_;
  numkit::FftPlan plan_;
};

[[nodiscard]] std::shared_ptr<const CubicNls> nls_build(const CubicNlsSpec& spec);

}  // namespace symdefect::problems
