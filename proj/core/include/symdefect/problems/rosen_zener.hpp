#pragma once

#include <cstddef>
#include <memory>

#include "symdefect/problems/interfaces.hpp"

namespace symdefect::problems {

struct RosenZenerSpec {
  std::size_t k = 50;
  double omega = 0.5;
  double t0 = 1.0;  // T_0, width of the sech envelope
  double v0 = 1.0;

  [[nodiscard]] std::size_t dim() const noexcept { return 2 * k; }
};

/// Rosen-Zener model in the interaction picture, i psi' = H(t) psi with
///   H(t) = f1(t) sigma_x (x) I_k + f2(t) sigma_y (x) tridiag(1, 0, 1),
///   f1 = V0 cos(w t) sech(t/T0),  f2 = V0 sin(w t) sech(t/T0).
/// The problem matrix is A(t) = -i H(t), stored dense.
class RosenZener final : public NonautonomousLinearProblem {
 public:
  explicit RosenZener(const RosenZenerSpec& spec);

  [[nodiscard]] std::size_t dim() const override { return spec_.dim(); }
  [[nodiscard]] ComplexMatrix matrix(double t) const override;
  [[nodiscard]] ComplexMatrix matrix_derivative(double t) const override;

  [[nodiscard]] ComplexMatrix hamiltonian(double t) const;
  [[nodiscard]] double f1(double t) const;
  [[nodiscard]] double f2(double t) const;
  [[nodiscard]] double f1_derivative(double t) const;
  [[nodiscard]] double f2_derivative(double t) const;

  /// psi(0) = (1, ..., 1).
  [[nodiscard]] ComplexVector initial_state() const;
  [[nodiscard]] const RosenZenerSpec& spec() const noexcept { return spec_; }

 private:
  ComplexMatrix combine(double c1, double c2) const;

  RosenZenerSpec spec_;
  ComplexMatrix term1_;  // sigma_x (x) I_k
  ComplexMatrix term2_;  // sigma_y (x) R
};

[[nodiscard]] std::shared_ptr<const RosenZener> rosen_zener_build(const RosenZenerSpec& spec);

}  // namespace symdefect::problems
