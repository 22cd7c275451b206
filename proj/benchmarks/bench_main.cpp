#include <benchmark/benchmark.h>

#include "pentaglobe/earthmap.hpp"
#include "pentaglobe/search.hpp"

using namespace pentaglobe;

namespace {

const PatternTag kTags[] = {PatternTag::a5, PatternTag::a4b, PatternTag::a2b2c, PatternTag::a3bc, PatternTag::a3b2};

void neighborhood_search(benchmark::State& st) {
  const auto p = kTags[st.range(0)];
  const Fragment host = build_neighborhood_fragment();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_completions(host, pattern(p), Labeling(p, host.edge_count())));
  st.SetLabel(std::string(pattern(p).name()));
}
BENCHMARK(neighborhood_search)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void timezone_tilings(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_timezone_tilings(d, PatternTag::a4b));
}
BENCHMARK(timezone_tilings)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void family_classification(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(classify_families(d, PatternTag::a3b2));
}
BENCHMARK(family_classification)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void closed_direct(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_closed(d, minimum_timezones(d), PatternTag::a2b2c));
}
BENCHMARK(closed_direct)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void closed_from_cycles(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  const auto g = build_family_graph(d, PatternTag::a2b2c);
  for (auto _ : st) benchmark::DoNotOptimize(closed_from_family_graph(g, minimum_timezones(d)));
}
BENCHMARK(closed_from_cycles)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
