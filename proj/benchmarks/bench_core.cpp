#include <benchmark/benchmark.h>

#include <cmath>

#include "casimir/casimir.hpp"

namespace {

using namespace casimir;

CavityGeometry reference_cavity() {
  return CavityGeometry{4e-9, 2.5 * 4e-9, 1.0, degrees_to_radians(5.59)};
}

void BM_LocalPressure(benchmark::State& state) {
  const auto geom = reference_cavity();
  const PhysicalConstants constants;
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_pressure(r, geom, constants));
    r = r + 1e-12 <= geom.wing_length ? r + 1e-12 : 0.0;
  }
}
BENCHMARK(BM_LocalPressure);

void BM_WingForce(benchmark::State& state) {
  const auto geom = reference_cavity();
  const PhysicalConstants constants;
  QuadratureSettings settings;
  settings.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wing_force(geom, constants, settings));
}
BENCHMARK(BM_WingForce)->Arg(6)->Arg(9)->Arg(12);

void BM_TotalForce(benchmark::State& state) {
  const auto geom = reference_cavity();
  const PeriodicStructure structure{geom, 1.58 * geom.end_separation, CavityCount::finite(2)};
  const PhysicalConstants constants;
  for (auto _ : state) benchmark::DoNotOptimize(total_force(structure, constants));
}
BENCHMARK(BM_TotalForce);

void BM_QSurface(benchmark::State& state) {
  const SearchProblem problem;
  const PhysicalConstants constants;
  const auto side = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(q_surface(problem, {side, side}, constants, {}, 1));
}
BENCHMARK(BM_QSurface)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_MaximizeQ(benchmark::State& state) {
  const SearchProblem problem;
  const PhysicalConstants constants;
  OptimizerSettings settings;
  settings.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_q(problem, constants, settings));
}
BENCHMARK(BM_MaximizeQ)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
