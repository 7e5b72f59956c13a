#include <benchmark/benchmark.h>

#include "fixinv/forward_solver.hpp"
#include "fixinv/gl_reconstruction.hpp"
#include "fixinv/moment_solver.hpp"
#include "fixinv/specfun.hpp"

using namespace fixinv;

static void BM_BesselJ(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) + 0.3;
  for (auto _ : state) {
    for (double x = 0.5; x < 50.0; x += 0.5) benchmark::DoNotOptimize(specfun::bessel_j(nu, x));
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(10)->Arg(35);

static void BM_CauchyInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CauchyNodes nodes;
  for (int i = 0; i < n; ++i) {
    nodes.x.push_back(Extended(i) + Extended(0.5));
    nodes.y.push_back(Extended(i));
  }
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_inverse(nodes));
}
BENCHMARK(BM_CauchyInverse)->Arg(11)->Arg(21)->Arg(41);

static void BM_ConstantWellPhases(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(constant_well_phases(1.2, 2.0, 1.0, 10));
}
BENCHMARK(BM_ConstantWellPhases);

static void BM_OdePhases(benchmark::State& state) {
  const auto pot = RadialPotential::gauss(-4.0, 5.0, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_phase_shifts(pot, 1.5, 6));
}
BENCHMARK(BM_OdePhases)->Unit(benchmark::kMillisecond);

static void BM_GLSolve(benchmark::State& state) {
  SpectralExpansion e;
  e.bound_terms.push_back({Extended(1), Extended(0.25)});
  e.coeffs = {Extended(0), Extended(0.25)};
  const auto grid = GLGrid::uniform(4.6, 4.6 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_gl(e, grid));
}
BENCHMARK(BM_GLSolve)->Arg(115)->Arg(230)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  const auto ph = constant_well_phases(1.2, 2.0, 1.0, 10);
  InversionConfig cfg;
  cfg.c = -0.3;
  cfg.h = -0.15;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(ph, cfg));
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
