#include <benchmark/benchmark.h>

#include "qg/mild.hpp"
#include "qg/operators.hpp"
#include "qg/random_field.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

RealField sample(int n) { return random_bandlimited(Grid2D(n), {1, 1.0, n / 4.0, 0.5}); }

void BM_ForwardTransform(benchmark::State& state) {
  const RealField f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transform_forward(f));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(2)->Range(64, 512);

void BM_InverseTransform(benchmark::State& state) {
  const SpectralField f = transform_forward(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(transform_inverse(f));
}
BENCHMARK(BM_InverseTransform)->RangeMultiplier(2)->Range(64, 512);

void BM_NonlinearTerm(benchmark::State& state) {
  const SpectralField f = transform_forward(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinear_term(f));
}
BENCHMARK(BM_NonlinearTerm)->RangeMultiplier(2)->Range(64, 512);

void BM_EtdStep(benchmark::State& state) {
  const RealField f = sample(static_cast<int>(state.range(0)));
  const SolverConfig cfg(0.75);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_etd(f, cfg, 1e-3, 1));
}
BENCHMARK(BM_EtdStep)->RangeMultiplier(2)->Range(64, 256);

void BM_BilinearB(benchmark::State& state) {
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, static_cast<int>(state.range(0)), 2.0);
  const Trajectory traj = free_evolution(sample(64), cfg, tg);
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_B(traj, traj, cfg, tg));
}
BENCHMARK(BM_BilinearB)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qg

BENCHMARK_MAIN();
