#include <benchmark/benchmark.h>

#include "vconn/cnc.hpp"
#include "vconn/gabow.hpp"
#include "vconn/generators.hpp"
#include "vconn/instrumentation.hpp"
#include "vconn/isocut.hpp"
#include "vconn/kernel.hpp"
#include "vconn/maxflow.hpp"
#include "vconn/pseudorandom.hpp"
#include "vconn/unweighted.hpp"
#include "vconn/weighted.hpp"

using namespace vconn;

namespace {

Graph bench_graph(int n) { return gen::random_min_degree(n, 6.0 / n, 4, 42); }

void BM_PairSeparator(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  int t = g.n() - 1;
  while (t > 1 && g.adjacent(0, t)) --t;
  for (auto _ : state) benchmark::DoNotOptimize(min_st_separator(g, 0, t));
}
BENCHMARK(BM_PairSeparator)->RangeMultiplier(4)->Range(64, 4096);

void BM_RootedConnectivity(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rooted_connectivity(g, g.min_degree_vertex()));
}
BENCHMARK(BM_RootedConnectivity)->RangeMultiplier(2)->Range(32, 256);

void BM_NiSparsify(benchmark::State& state) {
  Graph g = gen::random_connected(static_cast<int>(state.range(0)), 0.2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ni_sparsify(g, 4));
  state.counters["edges_in"] = static_cast<double>(g.m());
}
BENCHMARK(BM_NiSparsify)->RangeMultiplier(2)->Range(64, 1024);

void BM_Cnc(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  DistanceOracle dist = [&g](int u, int v) { return static_cast<std::int64_t>(symdiff_size(g, u, v)); };
  for (auto _ : state) benchmark::DoNotOptimize(cnc(g, dist, 4, CandidateEdges::GraphEdges));
}
BENCHMARK(BM_Cnc)->RangeMultiplier(2)->Range(64, 512);

void BM_KernelIndex(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_kernel_index(g, 2));
}
BENCHMARK(BM_KernelIndex)->RangeMultiplier(2)->Range(32, 128);

void BM_SymmetricCrossingFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_crossing_family(n, 2.0));
}
BENCHMARK(BM_SymmetricCrossingFamily)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_Selector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_selector(n, 3, 0.5));
}
BENCHMARK(BM_Selector)->RangeMultiplier(2)->Range(16, 128);

void BM_IsolatingCuts(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  VertexSet I = greedy_independent_subset(g, iota_set(g.n()));
  I.resize(std::min<size_t>(I.size(), 8));
  for (auto _ : state) benchmark::DoNotOptimize(isolating_vertex_cuts(g, I));
}
BENCHMARK(BM_IsolatingCuts)->RangeMultiplier(2)->Range(32, 512);

void BM_UnweightedDriver(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    counters().reset();
    benchmark::DoNotOptimize(vertex_connectivity_unweighted(g));
  }
  state.counters["flow_calls"] = static_cast<double>(counters().snapshot().flow_calls);
}
BENCHMARK(BM_UnweightedDriver)->DenseRange(16, 40, 8)->Unit(benchmark::kMillisecond);

void BM_WeightedDriver(benchmark::State& state) {
  WeightedDigraph d = gen::random_strong_digraph(static_cast<int>(state.range(0)), 0.4, 8, 5);
  for (auto _ : state) {
    counters().reset();
    benchmark::DoNotOptimize(vertex_connectivity_weighted(d));
  }
  const CounterSnapshot c = counters().snapshot();
  state.counters["sparsified_edges"] = static_cast<double>(c.sparsified_edges + c.lopsided_edges);
  state.counters["naive_edges"] = static_cast<double>(c.naive_edges + c.lopsided_naive_edges);
}
BENCHMARK(BM_WeightedDriver)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

void BM_Gabow(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gabow_vc(g, 6));
}
BENCHMARK(BM_Gabow)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
