#include <benchmark/benchmark.h>

#include "relqm/radial.hpp"

using namespace relqm;

namespace {

void BM_SolveKg(benchmark::State& state) {
  const auto coupling = Coupling::from_z_alpha(0.3);
  SolveOptions opts;
  opts.n_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = solve_kg_1s(1.0, coupling, opts);
    benchmark::DoNotOptimize(res.eigenvalue);
  }
}
BENCHMARK(BM_SolveKg)->Arg(2000)->Arg(20000);

void BM_SolveDirac(benchmark::State& state) {
  const auto coupling = Coupling::from_z_alpha(0.6);
  SolveOptions opts;
  opts.n_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = solve_dirac_1s(1.0, coupling, opts);
    benchmark::DoNotOptimize(res.eigenvalue);
  }
}
BENCHMARK(BM_SolveDirac)->Arg(2000)->Arg(20000);

void BM_SolveSchrodinger(benchmark::State& state) {
  const auto coupling = Coupling::from_z_alpha(0.2);
  for (auto _ : state) {
    auto res = solve_schrodinger_1s(1.0, coupling);
    benchmark::DoNotOptimize(res.eigenvalue);
  }
}
BENCHMARK(BM_SolveSchrodinger);

void BM_RatioFromRadial(benchmark::State& state) {
  const auto coupling = Coupling::from_z_alpha(0.3);
  const auto res = solve_kg_1s(1.0, coupling);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_from_radial(res, Model::KleinGordon, 1.0, coupling));
  }
}
BENCHMARK(BM_RatioFromRadial);

} // namespace
