#include <benchmark/benchmark.h>

#include <random>

#include "symdefect/control/registry.hpp"
#include "symdefect/defect/defect.hpp"
#include "symdefect/integrators/steppers.hpp"
#include "symdefect/numkit/expm.hpp"
#include "symdefect/numkit/fft.hpp"
#include "symdefect/problems/cubic_nls.hpp"
#include "symdefect/problems/rosen_zener.hpp"

using namespace symdefect;

namespace {

numkit::ComplexMatrix random_skew(std::size_t n) {
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  numkit::ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return 0.5 * (m - m.adjoint());
}

void BM_Expm(benchmark::State& state) {
  const auto m = random_skew(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numkit::expm(m));
}
BENCHMARK(BM_Expm)->Arg(20)->Arg(100);

void BM_Fft(benchmark::State& state) {
  const numkit::FftPlan plan(static_cast<std::size_t>(state.range(0)));
  numkit::ComplexVector v(plan.size(), 1.0);
  for (auto _ : state) {
    plan.forward(v.span());
    plan.inverse(v.span());
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Fft)->Arg(512)->Arg(4096);

void BM_StrangStepNls(benchmark::State& state) {
  const problems::CubicNls p(problems::CubicNlsSpec{});
  const auto u = p.initial_state();
  const auto s = integrators::strang();
  for (auto _ : state) benchmark::DoNotOptimize(integrators::step_splitting(s, p, 1e-2, u));
}
BENCHMARK(BM_StrangStepNls);

void BM_Emb43DefectNls(benchmark::State& state) {
  const problems::CubicNls p(problems::CubicNlsSpec{});
  const auto u = p.initial_state();
  const auto s = integrators::emb43_ak_s();
  for (auto _ : state) benchmark::DoNotOptimize(defect::splitting_defect_semilinear(s, p, 1e-2, u));
}
BENCHMARK(BM_Emb43DefectNls);

void BM_Magnus4DefectRosenZener(benchmark::State& state) {
  const problems::RosenZener p({});
  const auto u = p.initial_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect::magnus4_defect(p, 0.0, 0.1, u, defect::ExpVariant::hermite));
  }
}
BENCHMARK(BM_Magnus4DefectRosenZener)->Unit(benchmark::kMillisecond);

void BM_Cf4DefectRosenZener(benchmark::State& state) {
  const problems::RosenZener p({});
  const auto u = p.initial_state();
  const auto variant = state.range(0) ? defect::ExpVariant::hermite : defect::ExpVariant::taylor;
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect::cfm_defect(integrators::cf4(), p, 0.0, 0.1, u, variant));
  }
}
BENCHMARK(BM_Cf4DefectRosenZener)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
