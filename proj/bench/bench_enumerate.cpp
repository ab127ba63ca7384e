// Serial reference vs OpenMP kernel for the distinguishing-word search.
// Identical groups are used so that every candidate is visited.

#include <benchmark/benchmark.h>

#include "bsl/markedspace.hpp"

namespace {

void run_search(benchmark::State& state, bsl::ExecPolicy policy) {
  const bsl::MarkedGroupSpec g(2, bsl::XiSpec::integer(3));
  const auto len = static_cast<std::size_t>(state.range(0));
  std::uint64_t visited = 0;
  for (auto _ : state) {
    bsl::CandidateStats stats;
    auto hit = bsl::shortest_distinguishing(g, g, len, policy, &stats);
    benchmark::DoNotOptimize(hit);
    visited = stats.candidates;
  }
  state.counters["candidates"] = static_cast<double>(visited);
}

void BM_SearchSerial(benchmark::State& state) { run_search(state, bsl::ExecPolicy::Serial); }
void BM_SearchParallel(benchmark::State& state) { run_search(state, bsl::ExecPolicy::Parallel); }

BENCHMARK(BM_SearchSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
