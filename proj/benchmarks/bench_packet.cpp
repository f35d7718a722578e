#include <benchmark/benchmark.h>

#include "relqm/spectra.hpp"
#include "relqm/wavepacket.hpp"

using namespace relqm;

namespace {

void BM_BuildKgPacket(benchmark::State& state) {
  const PacketSpec spec{1.0 / 2500.0, 0.9, 1.0, 0.0};
  const auto xi = default_xi_grid(spec, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto prof = build_kg_packet(spec, xi);
    benchmark::DoNotOptimize(prof.rho.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildKgPacket)->Arg(501)->Arg(2001)->Arg(8001);

void BM_BuildDiracPacket(benchmark::State& state) {
  const PacketSpec spec{1.0 / 2500.0, 0.9, 1.0, 0.0};
  const auto xi = default_xi_grid(spec, 2001);
  for (auto _ : state) {
    auto prof = build_dirac_packet(spec, xi);
    benchmark::DoNotOptimize(prof.rho.data());
  }
}
BENCHMARK(BM_BuildDiracPacket);

void BM_MeasureRatio(benchmark::State& state) {
  const PacketSpec spec{1.0 / 2500.0, 0.9, 1.0, 0.0};
  const auto prof = build_kg_packet(spec, default_xi_grid(spec, 2001));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_ratio(prof));
  }
}
BENCHMARK(BM_MeasureRatio);

void BM_SampleCurve(benchmark::State& state) {
  for (auto _ : state) {
    auto pts = sample_curve(Model::Dirac, Quantity::Ratio, 0.0, 1.0,
                            static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(pts.data());
  }
}
BENCHMARK(BM_SampleCurve)->Arg(101)->Arg(10001);

} // namespace
