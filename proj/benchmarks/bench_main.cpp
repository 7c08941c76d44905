#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "eulext/extension.hpp"
#include "eulext/generator.hpp"
#include "eulext/pairing.hpp"
#include "eulext/verify.hpp"
#include "eulext/walk_builder.hpp"

namespace {

std::size_t target_m(int n) {
  return std::max<std::size_t>(2 * n, static_cast<std::size_t>(std::floor(0.05 * std::pow(n, 1.5))));
}

eulext::Graph instance(int n) {
  const std::size_t m = target_m(n);
  return eulext::gen_random_connected_graph(n, m - n, static_cast<int>(0.3 * n), 17);
}

void BM_Extend(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eulext::Graph g = instance(n);
  const std::size_t m = target_m(n);
  eulext::ExtensionConfig config;
  config.mode = eulext::Mode::kAdvisory;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eulext::extend(g, m, ++seed, config));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Extend)->Arg(100)->Arg(400)->Arg(1600)->Arg(3200)->Unit(benchmark::kMillisecond);

void BM_SampleAndEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eulext::Graph g = instance(n);
  const auto marking = eulext::mark_edges(g, target_m(n));
  const std::size_t w = static_cast<std::size_t>(std::floor(0.05 * std::pow(n, 1.5)));
  eulext::Rng rng(5);
  for (auto _ : state) {
    const auto seq = eulext::sample_sequence(0, 1, w, n, rng);
    benchmark::DoNotOptimize(eulext::evaluate_events(seq, marking.g0, marking.g0.edge_count()));
  }
}
BENCHMARK(BM_SampleAndEvaluate)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

void BM_Hierholzer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eulext::Graph g = instance(n);
  eulext::ExtensionConfig config;
  config.mode = eulext::Mode::kAdvisory;
  const eulext::Graph h = eulext::extend(g, target_m(n), 3, config).h;
  for (auto _ : state) benchmark::DoNotOptimize(eulext::hierholzer_circuit(h));
  state.counters["edges"] = static_cast<double>(h.edge_count());
}
BENCHMARK(BM_Hierholzer)->Arg(400)->Arg(3200)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
