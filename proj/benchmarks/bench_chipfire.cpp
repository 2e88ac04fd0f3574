#include <benchmark/benchmark.h>

#include "chipfire/chipfire.hpp"

using namespace chipfire;

namespace {

const Graph& graph_for(int which) {
  static const Graph pe = petersen().graph;
  static const Graph sc = schlafli().graph;
  static const Graph pa = paley(109).graph;
  static const Graph t21 = triangular(21).graph;
  switch (which) {
    case 0: return pe;
    case 1: return sc;
    case 2: return pa;
    default: return t21;
  }
}

void BM_Jacobi(benchmark::State& state) {
  const auto L = laplacian(graph_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::eigendecompose(L));
  state.SetLabel(std::to_string(L.rows()) + " vertices");
}
BENCHMARK(BM_Jacobi)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PinvShift(benchmark::State& state) {
  const auto L = laplacian(graph_for(static_cast<int>(state.range(0))));
  const double c = static_cast<double>(L.diagonal().maxCoeff());
  for (auto _ : state) benchmark::DoNotOptimize(spectral::pinv_shift(L, c));
  state.SetLabel(std::to_string(L.rows()) + " vertices");
}
BENCHMARK(BM_PinvShift)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PlayPaley109(benchmark::State& state) {
  const auto& g = graph_for(2);
  const auto a = single_vertex_config(g, 0, 2900);
  const auto strategy = static_cast<StrategyKind>(state.range(0));
  PlayOptions opts;
  opts.cutoff = 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(play(g, a, {strategy, 7}, opts));
}
BENCHMARK(BM_PlayPaley109)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_ConfluenceGnp(benchmark::State& state) {
  const auto g = gnp(state.range(0), 0.3, 11).graph;
  CounterRng rng(3, 0);
  ChipConfig a{std::vector<std::int64_t>(g.vertex_count(), 0)};
  for (std::size_t c = 0; c + 1 < g.edge_count(); ++c) ++a.chips[rng.below(g.vertex_count())];
  const std::vector<FiringStrategy> strategies{FiringStrategy::min_index(), FiringStrategy::max_chips(),
                                               FiringStrategy::fifo(), FiringStrategy::random(1)};
  for (auto _ : state) benchmark::DoNotOptimize(confluence_check(g, a, strategies));
}
BENCHMARK(BM_ConfluenceGnp)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMicrosecond);

void BM_BestBound(benchmark::State& state) {
  const auto& g = graph_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_bound(g, 100));
}
BENCHMARK(BM_BestBound)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
