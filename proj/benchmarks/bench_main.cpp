#include <benchmark/benchmark.h>

#include "burling/burling_set.hpp"
#include "burling/construction.hpp"
#include "burling/graph.hpp"
#include "burling/io.hpp"
#include "burling/relations.hpp"

using namespace burling;

namespace {

const Scene& cached(int k) {
  static const Scene scenes[] = {burling_sequence(named_shape("frame"), 1), burling_sequence(named_shape("frame"), 2),
                                 burling_sequence(named_shape("frame"), 3), burling_sequence(named_shape("frame"), 4)};
  return scenes[k - 1];
}

void BM_Generate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(burling_sequence(named_shape("frame"), k));
}
BENCHMARK(BM_Generate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GenerateUnverified(benchmark::State& state) {
  BuildOptions opts;
  opts.verify_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(burling_sequence(named_shape("gamma"), 4, opts));
}
BENCHMARK(BM_GenerateUnverified)->Unit(benchmark::kMillisecond);

void BM_CheckExact(benchmark::State& state) {
  const Scene& sc = cached(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_constraints(sc.family));
}
BENCHMARK(BM_CheckExact)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_CheckSampled(benchmark::State& state) {
  CheckOptions opts;
  opts.samples = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(check_constraints(cached(4).family, opts));
}
BENCHMARK(BM_CheckSampled)->Unit(benchmark::kMillisecond);

void BM_Chromatic(benchmark::State& state) {
  const Graph g = oriented_intersection_graph(cached(static_cast<int>(state.range(0))).family).underlying();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_Chromatic)->DenseRange(3, 4)->Unit(benchmark::kMicrosecond);

void BM_RecognizeOriented(benchmark::State& state) {
  const OGraph g = oriented_intersection_graph(cached(static_cast<int>(state.range(0))).family);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_oriented(g));
}
BENCHMARK(BM_RecognizeOriented)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_RecognizeK33(benchmark::State& state) {
  std::vector<std::string> labels{"a", "b", "c", "x", "y", "z"};
  Graph g(labels);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 3; j < 6; ++j) g.add_edge(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_unoriented(g));
}
BENCHMARK(BM_RecognizeK33)->Unit(benchmark::kMicrosecond);

void BM_SceneRoundTrip(benchmark::State& state) {
  const Scene& sc = cached(4);
  for (auto _ : state) benchmark::DoNotOptimize(read_scene(write_scene(sc)));
}
BENCHMARK(BM_SceneRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
