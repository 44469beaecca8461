#include <cmath>

#include <benchmark/benchmark.h>

#include "modeconv/oscillator.hpp"
#include "modeconv/polarization.hpp"
#include "modeconv/protocol.hpp"

namespace {

void BM_BuildModel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modeconv::oscillator::build_model(0.04, n));
  }
}
BENCHMARK(BM_BuildModel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ChshScan(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modeconv::polarization::chsh_scan(0.0, M_PI, steps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ChshScan)->Arg(91)->Arg(1000);

void BM_Campaign(benchmark::State& state) {
  const modeconv::protocol::ConversionConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(modeconv::protocol::run_campaign(
        config, static_cast<std::uint64_t>(state.range(0)), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Campaign)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
