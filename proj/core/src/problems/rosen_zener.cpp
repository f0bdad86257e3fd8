#include "symdefect/problems/rosen_zener.hpp"

#include <cmath>
#include <stdexcept>

namespace symdefect::problems {

RosenZener::RosenZener(const RosenZenerSpec& spec) : spec_(spec) {
  if (spec.k == 0) throw std::invalid_argument("RosenZener: k must be positive");
  if (spec.t0 <= 0.0) throw std::invalid_argument("RosenZener: T0 must be positive");
  term1_ = numkit::kron(numkit::pauli_x(), ComplexMatrix::identity(spec.k));
  term2_ = numkit::kron(numkit::pauli_y(), numkit::tridiagonal(spec.k, 1.0, 0.0, 1.0));
}

double RosenZener::f1(double t) const {
  return spec_.v0 * std::cos(spec_.omega * t) / std::cosh(t / spec_.t0);
}

double RosenZener::f2(double t) const {
  return spec_.v0 * std::sin(spec_.omega * t) / std::cosh(t / spec_.t0);
}

double RosenZener::f1_derivative(double t) const {
  const double w = spec_.omega;
  const double sech = 1.0 / std::cosh(t / spec_.t0);
  const double tanh = std::tanh(t / spec_.t0);
  return spec_.v0 * sech * (-w * std::sin(w * t) - std::cos(w * t) * tanh / spec_.t0);
}

double RosenZener::f2_derivative(double t) const {
  const double w = spec_.omega;
  const double sech = 1.0 / std::cosh(t / spec_.t0);
  const double tanh = std::tanh(t / spec_.t0);
  return spec_.v0 * sech * (w * std::cos(w * t) - std::sin(w * t) * tanh / spec_.t0);
}

ComplexMatrix RosenZener::combine(double c1, double c2) const {
  ComplexMatrix m = c1 * term1_;
  m.axpy(c2, term2_);
  return m;
}

ComplexMatrix RosenZener::hamiltonian(double t) const { return combine(f1(t), f2(t)); }

ComplexMatrix RosenZener::matrix(double t) const {
  ComplexMatrix m = combine(f1(t), f2(t));
  m *= numkit::Complex(0.0, -1.0);
  return m;
}

ComplexMatrix RosenZener::matrix_derivative(double t) const {
  ComplexMatrix m = combine(f1_derivative(t), f2_derivative(t));
  m *= numkit::Complex(0.0, -1.0);
  return m;
}

ComplexVector RosenZener::initial_state() const { return ComplexVector(dim(), 1.0); }

std::shared_ptr<const RosenZener> rosen_zener_build(const RosenZenerSpec& spec) {
  return std::make_shared<const RosenZener>(spec);
}

}  // namespace symdefect::problems
