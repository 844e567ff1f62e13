// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "clustnet/affiliation.hpp"
#include "clustnet/stats.hpp"
#include "clustnet/triadic_chain.hpp"

using namespace clustnet;

namespace {

constexpr std::uint64_t kSeed = 7;

GraphState sparse_graph(std::size_t n, double mean_degree) {
  Rng rng(kSeed);
  GraphState g(n);
  const double p = mean_degree / static_cast<double>(n - 1);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (rng.bernoulli(p)) g.toggle_edge(i, j);
    }
  }
  return g;
}

AffiliationWeights unit_weights(std::size_t n) {
  return {std::vector<double>(n, 1.0), std::vector<double>(n, 1.0), static_cast<double>(n)};
}

template <SnapshotStats (*Kernel)(const GraphState&)>
void BM_Snapshot(benchmark::State& state) {
  const GraphState g = sparse_graph(static_cast<std::size_t>(state.range(0)), 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_ProjectionStats(benchmark::State& state) {
  const AffiliationWeights w = unit_weights(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, 16, kSeed));
  state.SetItemsProcessed(state.iterations() * 16);
}

template <auto Kernel>
void BM_ProjectedDegrees(benchmark::State& state) {
  const AffiliationWeights w = unit_weights(static_cast<std::size_t>(state.range(0)));
  std::vector<Vertex> tracked(10);
  std::iota(tracked.begin(), tracked.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, tracked, 256, kSeed));
  state.SetItemsProcessed(state.iterations() * 256);
}

void BM_TriadicJumps(benchmark::State& state) {
  TriadicParams p;
  p.alpha = 2.75;
  p.beta = 2.5;
  p.lambda = 4000;
  p.mu = 3000;
  p.mu0 = 200;
  TriadicChain chain(GraphState(200), p, kSeed);
  for (int k = 0; k < 100000; ++k) chain.step();
  for (auto _ : state) benchmark::DoNotOptimize(chain.step());
  state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_Snapshot<serial::snapshot>)->Name("snapshot/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_Snapshot<snapshot>)->Name("snapshot/openmp")->Arg(1000)->Arg(10000);
BENCHMARK(BM_ProjectionStats<serial::sample_projection_stats>)->Name("projection_stats/serial")->Arg(1000)->Arg(4000);
BENCHMARK(BM_ProjectionStats<sample_projection_stats>)->Name("projection_stats/openmp")->Arg(1000)->Arg(4000);
BENCHMARK(BM_ProjectedDegrees<serial::sample_projected_degrees>)->Name("projected_degrees/serial")->Arg(2000);
BENCHMARK(BM_ProjectedDegrees<sample_projected_degrees>)->Name("projected_degrees/openmp")->Arg(2000);
BENCHMARK(BM_TriadicJumps)->Name("triadic_chain/jump");

BENCHMARK_MAIN();
