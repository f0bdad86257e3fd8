#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "symdefect/errors.hpp"
#include "symdefect/problems/cubic_nls.hpp"
#include "symdefect/problems/rosen_zener.hpp"
#include "symdefect/problems/scalar_problems.hpp"

using namespace symdefect::problems;
using symdefect::numkit::Complex;
using symdefect::numkit::norm2;
using testing_support::central_difference_slope;
using testing_support::random_vector;
using testing_support::rk4;

namespace {

const Complex I{0.0, 1.0};

ComplexVector derivative_of_soliton(const CubicNls& p, double t) {
  ComplexVector d(p.dim());
  for (std::size_t m = 0; m < p.dim(); ++m) {
    const double x = p.grid()[m];
    d[m] = nls_exact_soliton(x, t) * (1.5 * I - 2.0 * std::tanh(2.0 * (t + x)));
  }
  return d;
}

}  // namespace

TEST(Soliton, ClosedFormValues) {
  EXPECT_EQ(nls_exact_soliton(0.0, 0.0), Complex(2.0));
  const Complex v = nls_exact_soliton(0.0, M_PI / 3.0);
  EXPECT_LT(std::abs(v - 2.0 * I / std::cosh(2.0 * M_PI / 3.0)), 1e-15);
  for (double x : {0.3, 1.1, 4.0}) {
    EXPECT_NEAR(std::abs(nls_exact_soliton(x, 0.0)), std::abs(nls_exact_soliton(-x, 0.0)), 1e-15);
  }
}

TEST(CubicNls, Grid) {
  const CubicNls p(CubicNlsSpec{});
  EXPECT_EQ(p.dim(), 512u);
  EXPECT_DOUBLE_EQ(p.grid_spacing(), 1.0 / 16.0);
  EXPECT_DOUBLE_EQ(p.grid().front(), -16.0);
  EXPECT_DOUBLE_EQ(p.grid().back(), 16.0 - 1.0 / 16.0);
  const double k1 = 2.0 * M_PI / 32.0;
  EXPECT_DOUBLE_EQ(p.wavenumbers()[1], k1);
  EXPECT_DOUBLE_EQ(p.wavenumbers()[511], -k1);
  EXPECT_DOUBLE_EQ(p.wavenumbers()[256], -256 * k1);
}

TEST(CubicNls, RejectsBadGrid) {
  CubicNlsSpec s;
  s.points = 500;
  EXPECT_THROW(CubicNls{s}, symdefect::DimensionError);
  CubicNlsSpec empty;
  empty.x_max = empty.x_min;
  EXPECT_THROW(CubicNls{empty}, std::invalid_argument);
}

TEST(CubicNls, WeightedNorm) {
  const CubicNls p(CubicNlsSpec{});
  const ComplexVector ones(p.dim(), 1.0);
  EXPECT_NEAR(p.norm(ones), std::sqrt(32.0), 1e-13);
}

TEST(CubicNls, LinearPartOnFourierMode) {
  const CubicNls p(CubicNlsSpec{});
  const double k = 3.0 * 2.0 * M_PI / 32.0;
  ComplexVector mode(p.dim());
  for (std::size_t m = 0; m < p.dim(); ++m) mode[m] = std::polar(1.0, k * p.grid()[m]);
  const ComplexVector expected = (-0.5 * I * k * k) * mode;
  // Roundoff scales with the largest wavenumber squared.
  EXPECT_LT(norm2(p.apply_linear(mode) - expected), 1e-12 * norm2(mode));
  const ComplexVector flowed = p.flow_linear(0.7, mode);
  EXPECT_LT(norm2(flowed - std::exp(-0.35 * I * k * k) * mode), 1e-13 * norm2(mode));
}

TEST(CubicNls, FlowBClosedForms) {
  const CubicNls p(CubicNlsSpec{});
  EXPECT_EQ(p.flow_b(0.0, ComplexVector(p.dim(), 0.0)), ComplexVector(p.dim(), 0.0));
  ComplexVector u(p.dim());
  u[0] = 2.0;
  const ComplexVector r = p.flow_b(1.0, u);
  EXPECT_LT(std::abs(r[0] - 2.0 * std::polar(1.0, 4.0)), 1e-14);
  EXPECT_EQ(r[1], Complex(0.0));
}

TEST(CubicNls, FlowBMatchesRk4) {
  CubicNlsSpec s;
  s.points = 16;
  const CubicNls p(s);
  std::mt19937 rng(21);
  const ComplexVector u = random_vector(rng, p.dim(), 0.6);
  const ComplexVector ref = rk4([&](const ComplexVector& v) { return p.part_b(v); }, u, 0.8, 20000);
  EXPECT_LT(norm2(p.flow_b(0.8, u) - ref), 1e-11);
}

TEST(CubicNls, SubflowsConserveNorm) {
  const CubicNls p(CubicNlsSpec{});
  const ComplexVector u = p.soliton_on_grid(0.2);
  for (double t : {0.01, 0.3, 2.0}) {
    EXPECT_NEAR(p.norm(p.flow_linear(t, u)), p.norm(u), 1e-12);
    const ComplexVector b = p.flow_b(t, u);
    for (std::size_t m = 0; m < p.dim(); m += 37) EXPECT_NEAR(std::abs(b[m]), std::abs(u[m]), 1e-14);
  }
}

TEST(CubicNls, SemigroupProperty) {
  const CubicNls p(CubicNlsSpec{});
  const ComplexVector u = p.soliton_on_grid(0.0);
  EXPECT_LT(p.norm(p.flow_linear(0.3, p.flow_linear(0.2, u)) - p.flow_linear(0.5, u)), 1e-12);
  EXPECT_LT(p.norm(p.flow_b(0.3, p.flow_b(0.2, u)) - p.flow_b(0.5, u)), 1e-12);
}

TEST(CubicNls, DerivativesMatchFiniteDifferences) {
  CubicNlsSpec s;
  s.points = 32;
  const CubicNls p(s);
  std::mt19937 rng(22);
  const ComplexVector u = random_vector(rng, p.dim(), 0.5);
  const ComplexVector v = random_vector(rng, p.dim());
  const std::vector<double> eps{1e-2, 5e-3, 2.5e-3};
  const double t = 0.4;
  EXPECT_NEAR(central_difference_slope([&](double e) { return p.part_b(u + e * v); },
                                       p.part_b_derivative(u, v), eps),
              2.0, 0.1);
  EXPECT_NEAR(central_difference_slope([&](double e) { return p.flow_b(t, u + e * v); },
                                       p.flow_b_derivative(t, u, v), eps),
              2.0, 0.1);
  // Linear pieces are exact: the FD quotient matches to roundoff.
  const ComplexVector fdl = 50.0 * (p.flow_linear(t, u + 0.01 * v) - p.flow_linear(t, u - 0.01 * v));
  EXPECT_LT(norm2(fdl - p.flow_a_derivative(t, u, v)), 1e-10);
}

TEST(CubicNls, SolitonSatisfiesSemidiscreteEquation) {
  const CubicNls p(CubicNlsSpec{});
  for (double t : {0.0, 0.5}) {
    const ComplexVector u = p.soliton_on_grid(t);
    EXPECT_LT(p.norm(p.rhs(u) - derivative_of_soliton(p, t)), 1e-9) << "t=" << t;
  }
}

TEST(CubicNls, TwoSolitonInitialState) {
  CubicNlsSpec s;
  s.initial = CubicNlsSpec::Initial::two_soliton;
  const CubicNls p(s);
  const ComplexVector u = p.initial_state();
  // Peaks of modulus 2 sit at x = 5 and x = -5 (grid points).
  EXPECT_NEAR(std::abs(u[static_cast<std::size_t>((5.0 + 16.0) * 16)]), 2.0, 1e-7);
  EXPECT_NEAR(std::abs(u[static_cast<std::size_t>((-5.0 + 16.0) * 16)]), 2.0, 1e-7);
  const CubicNls single(CubicNlsSpec{});
  EXPECT_EQ(single.initial_state(), single.soliton_on_grid(0.0));
}

TEST(RosenZener, CoefficientsAndMatrix) {
  const RosenZener p(RosenZenerSpec{});
  EXPECT_EQ(p.dim(), 100u);
  EXPECT_DOUBLE_EQ(p.f1(0.0), 1.0);
  EXPECT_DOUBLE_EQ(p.f2(0.0), 0.0);
  const double t = 0.9;
  EXPECT_NEAR(p.f1(t), std::cos(0.5 * t) / std::cosh(t), 1e-15);
  EXPECT_NEAR(p.f2(t), std::sin(0.5 * t) / std::cosh(t), 1e-15);

  const ComplexMatrix a0 = p.matrix(0.0);
  const ComplexMatrix expected =
      -I * symdefect::numkit::kron(symdefect::numkit::pauli_x(), ComplexMatrix::identity(50));
  EXPECT_EQ(a0, expected);
  EXPECT_EQ(p.initial_state(), ComplexVector(100, 1.0));
}

TEST(RosenZener, HermitianStructure) {
  const RosenZener p(RosenZenerSpec{});
  for (double t : {-0.4, 0.3, 2.2}) {
    const ComplexMatrix h = p.hamiltonian(t);
    EXPECT_EQ(h, h.adjoint());
    const ComplexMatrix a = p.matrix(t);
    EXPECT_LT((a + a.adjoint()).frobenius_norm(), 1e-15);
    EXPECT_LT((a + I * h).frobenius_norm(), 1e-15);
  }
}

TEST(RosenZener, DerivativeMatchesFiniteDifferences) {
  const RosenZener p(RosenZenerSpec{});
  std::mt19937 rng(23);
  const ComplexVector v = random_vector(rng, p.dim());
  const double t = 0.7;
  const double slope = central_difference_slope([&](double e) { return p.matrix(t + e) * v; },
                                                p.matrix_derivative(t) * v, {4e-2, 2e-2, 1e-2});
  EXPECT_NEAR(slope, 2.0, 0.1);
  const double e = 1e-5;
  EXPECT_NEAR(p.f1_derivative(t), (p.f1(t + e) - p.f1(t - e)) / (2 * e), 1e-9);
  EXPECT_NEAR(p.f2_derivative(t), (p.f2(t + e) - p.f2(t - e)) / (2 * e), 1e-9);
}

TEST(ToySplit, SubflowValues) {
  const ToySplit p(-1.0, 0.5);
  const ComplexVector one{1.0};
  EXPECT_NEAR(std::abs(p.flow_a(0.3, one)[0] - std::exp(-0.3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.flow_b(1.0, one)[0] - 2.0), 0.0, 1e-15);
  EXPECT_THROW((void)p.flow_b(2.0, one), symdefect::StepFailure);
}

TEST(ToySplit, ExactFlowMatchesRk4) {
  for (double lambda : {-1.0, 0.0, 0.4}) {
    const ToySplit p(lambda, 0.5);
    const ComplexVector u{0.8};
    const ComplexVector ref = rk4([&](const ComplexVector& v) { return p.rhs(v); }, u, 1.0, 20000);
    EXPECT_LT(std::abs(p.exact_flow(1.0, u)[0] - ref[0]), 1e-12) << lambda;
  }
}

TEST(ToySplit, DerivativesMatchFiniteDifferences) {
  const ToySplit p(-1.0, 0.5);
  const ComplexVector u{{0.7, 0.2}};
  const ComplexVector v{{0.3, -1.0}};
  const std::vector<double> eps{1e-2, 5e-3, 2.5e-3};
  EXPECT_NEAR(central_difference_slope([&](double e) { return p.flow_b(0.6, u + e * v); },
                                       p.flow_b_derivative(0.6, u, v), eps),
              2.0, 0.1);
  // part_b is quadratic, so the central quotient is exact up to roundoff.
  const ComplexVector fd = 50.0 * (p.part_b(u + 0.01 * v) - p.part_b(u - 0.01 * v));
  EXPECT_LT(norm2(fd - p.part_b_derivative(u, v)), 1e-13);
}

TEST(QuadraticDecay, ExactFlow) {
  const QuadraticDecay p(2);
  const ComplexVector u{1.0, 0.5};
  const ComplexVector r = p.exact_flow(2.0, u);
  EXPECT_NEAR(std::abs(r[0] - 1.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r[1] - 0.25), 0.0, 1e-15);
  const ComplexVector ref = rk4([&](const ComplexVector& v) { return p.rhs(v); }, u, 2.0, 20000);
  EXPECT_LT(norm2(r - ref), 1e-12);
}
