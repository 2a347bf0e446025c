#include <benchmark/benchmark.h>

#include "hmr/clique.hpp"
#include "hmr/f2.hpp"
#include "hmr/graph.hpp"
#include "hmr/halfmult.hpp"
#include "hmr/search.hpp"

namespace {

void BM_MaxClique(benchmark::State& state) {
  const auto g = hmr::sample_er_graph(static_cast<std::size_t>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(hmr::max_clique_size(g));
}
BENCHMARK(BM_MaxClique)->Arg(64)->Arg(128)->Arg(200);

void BM_CliqueFreeCheckSymplectic(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto g = hmr::build_cf_graph(t);
  for (auto _ : state) benchmark::DoNotOptimize(hmr::has_clique(g, t));
}
BENCHMARK(BM_CliqueFreeCheckSymplectic)->Arg(6)->Arg(8)->Arg(10);

void BM_ExactIndependence(benchmark::State& state) {
  const auto g = hmr::sample_er_graph(64, 0.5, 5);
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hmr::exact_independence_prob(g, s));
}
BENCHMARK(BM_ExactIndependence)->Arg(4)->Arg(8)->Arg(12);

void BM_MonteCarlo(benchmark::State& state) {
  const auto g = hmr::sample_er_graph(1000, 0.3, 5);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hmr::mc_independence_prob(g, 6, 100000, 1, threads));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->UseRealTime();

void BM_EnumerateKtFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hmr::for_each_ktfree(n, 4, [](auto) {}));
}
BENCHMARK(BM_EnumerateKtFree)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
