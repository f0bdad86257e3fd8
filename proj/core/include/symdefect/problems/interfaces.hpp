#pragma once

#include <cstddef>

#include "symdefect/numkit/linalg.hpp"

namespace symdefect::problems {

using numkit::ComplexMatrix;
using numkit::ComplexVector;

/// Common base: state dimension and the norm in which errors are reported.
class EvolutionProblem {
 public:
  virtual ~EvolutionProblem() = default;

  [[nodiscard]] virtual std::size_t dim() const = 0;

  /// Plain Euclidean norm unless the discretization calls for a weighted one.
  [[nodiscard]] virtual double norm(const ComplexVector& v) const { return numkit::norm2(v); }
};

/// u' = F(u). The derivative F'(u) v is only required to be real-linear in v.
class AutonomousProblem : public EvolutionProblem {
 public:
  [[nodiscard]] virtual ComplexVector rhs(const ComplexVector& u) const = 0;
  [[nodiscard]] virtual ComplexVector rhs_derivative(const ComplexVector& u,
                                                     const ComplexVector& v) const = 0;
};

/// u' = A(u) + B(u) with exactly solvable subflows E_A, E_B and their
/// derivatives with respect to the initial value. Either part may be
/// nonlinear.
class SplitNonlinearProblem : public AutonomousProblem {
 public:
  [[nodiscard]] virtual ComplexVector part_a(const ComplexVector& u) const = 0;
  [[nodiscard]] virtual ComplexVector part_a_derivative(const ComplexVector& u,
                                                        const ComplexVector& v) const = 0;
  [[nodiscard]] virtual ComplexVector flow_a(double t, const ComplexVector& u) const = 0;
  /// d/du E_A(t, u) applied to v.
  [[nodiscard]] virtual ComplexVector flow_a_derivative(double t, const ComplexVector& u,
                                                        const ComplexVector& v) const = 0;

  [[nodiscard]] virtual ComplexVector part_b(const ComplexVector& u) const = 0;
  [[nodiscard]] virtual ComplexVector part_b_derivative(const ComplexVector& u,
                                                        const ComplexVector& v) const = 0;
  [[nodiscard]] virtual ComplexVector flow_b(double t, const ComplexVector& u) const = 0;
  [[nodiscard]] virtual ComplexVector flow_b_derivative(double t, const ComplexVector& u,
                                                        const ComplexVector& v) const = 0;

  [[nodiscard]] ComplexVector rhs(const ComplexVector& u) const final {
    return part_a(u) + part_b(u);
  }
  [[nodiscard]] ComplexVector rhs_derivative(const ComplexVector& u,
                                             const ComplexVector& v) const final {
    return part_a_derivative(u, v) + part_b_derivative(u, v);
  }
};

/// Split problem whose A-part is a linear operator, u' = A u + B(u).
/// Implementations provide apply_linear and flow_linear (= e^{tA}u).
class SemilinearProblem : public SplitNonlinearProblem {
 public:
  [[nodiscard]] virtual ComplexVector apply_linear(const ComplexVector& u) const = 0;
  [[nodiscard]] virtual ComplexVector flow_linear(double t, const ComplexVector& u) const = 0;

  [[nodiscard]] ComplexVector part_a(const ComplexVector& u) const final {
    return apply_linear(u);
  }
  [[nodiscard]] ComplexVector part_a_derivative(const ComplexVector&,
                                                const ComplexVector& v) const final {
    return apply_linear(v);
  }
  [[nodiscard]] ComplexVector flow_a(double t, const ComplexVector& u) const final {
    return flow_linear(t, u);
  }
  [[nodiscard]] ComplexVector flow_a_derivative(double t, const ComplexVector&,
                                                const ComplexVector& v) const final {
    return flow_linear(t, v);
  }
};

/// u' = A(t) u with an analytic A'(t).
class NonautonomousLinearProblem : public EvolutionProblem {
 public:
  [[nodiscard]] virtual ComplexMatrix matrix(double t) const = 0;
  [[nodiscard]] virtual ComplexMatrix matrix_derivative(double t) const = 0;
};

}  // namespace symdefect::problems
