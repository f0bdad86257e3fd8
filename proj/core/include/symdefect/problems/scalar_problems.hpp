#pragma once

#include <functional>
#include <memory>

#include "symdefect/problems/interfaces.hpp"

namespace symdefect::problems {

/// Scalar u' = lambda u + mu u^2 split into E_A(t,u) = e^{lambda t} u and
/// E_B(t,u) = u / (1 - mu t u). Used as a fixture for the nonlinear splitting
/// algorithms. flow_b throws StepFailure when 1 - mu t u reaches a pole.
class ToySplit final : public SplitNonlinearProblem {
 public:
  explicit ToySplit(double lambda = -1.0, double mu = 0.5) : lambda_(lambda), mu_(mu) {}

  [[nodiscard]] std::size_t dim() const override { return 1; }

  [[nodiscard]] ComplexVector part_a(const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector part_a_derivative(const ComplexVector& u,
                                                const ComplexVector& v) const override;
  [[nodiscard]] ComplexVector flow_a(double t, const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector flow_a_derivative(double t, const ComplexVector& u,
                                                const ComplexVector& v) const override;

  [[nodiscard]] ComplexVector part_b(const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector part_b_derivative(const ComplexVector& u,
                                                const ComplexVector& v) const override;
  [[nodiscard]] ComplexVector flow_b(double t, const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector flow_b_derivative(double t, const ComplexVector& u,
                                                const ComplexVector& v) const override;

  /// Closed-form solution of the Bernoulli equation.
  [[nodiscard]] ComplexVector exact_flow(double t, const ComplexVector& u) const;

  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double mu() const noexcept { return mu_; }

 private:
  double lambda_;
  double mu_;
};

[[nodiscard]] std::shared_ptr<const ToySplit> toy_split_build(double lambda = -1.0,
                                                              double mu = 0.5);

/// Componentwise u' = -u^2 with exact flow u / (1 + t u).
class QuadraticDecay final : public AutonomousProblem {
 public:
  explicit QuadraticDecay(std::size_t dim = 1) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const override { return dim_; }
  [[nodiscard]] ComplexVector rhs(const ComplexVector& u) const override;
  [[nodiscard]] ComplexVector rhs_derivative(const ComplexVector& u,
                                             const ComplexVector& v) const override;
  [[nodiscard]] ComplexVector exact_flow(double t, const ComplexVector& u) const;

 private:
  std::size_t dim_;
};

/// Autonomous problem assembled from callables; mostly for tests.
class FunctionProblem final : public AutonomousProblem {
 public:
  using Field = std::function<ComplexVector(const ComplexVector&)>;
  using Derivative = std::function<ComplexVector(const ComplexVector&, const ComplexVector&)>;

  FunctionProblem(std::size_t dim, Field f, Derivative df)
      : dim_(dim), f_(std::move(f)), df_(std::move(df)) {}

  [[nodiscard]] std::size_t dim() const override { return dim_; }
  [[nodiscard]] ComplexVector rhs(const ComplexVector& u) const override { return f_(u); }
  [[nodiscard]] ComplexVector rhs_derivative(const ComplexVector& u,
                                             const ComplexVector& v) const override {
    return df_(u, v);
  }

 private:
  std::size_t dim_;
  Field f_;
  Derivative df_;
};

}  // namespace symdefect::problems
