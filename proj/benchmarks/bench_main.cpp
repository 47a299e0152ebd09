#include <benchmark/benchmark.h>

#include <random>

#include "gturan/canonical.hpp"
#include "gturan/containment.hpp"
#include "gturan/invariants.hpp"
#include "gturan/solver.hpp"

using namespace gturan;

namespace {

Graph random_graph(int n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(density);
  Graph g = empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = add_edge(g, u, v);
  return g;
}

void BM_CanonicalRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(10)->Arg(20)->Arg(40)->Arg(64);

void BM_CanonicalSymmetric(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalSymmetric)->Arg(16)->Arg(64);

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_free(n, GraphFamily{}).size());
}
BENCHMARK(BM_EnumerateAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ExMatchingFree(benchmark::State& state) {
  const GraphFamily fam("M4,P5", {matching(4), path(5)});
  SolverOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ex_general(8, 2, fam, opts).value);
}
BENCHMARK(BM_ExMatchingFree)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Containment(benchmark::State& state) {
  const Graph host = random_graph(12, 0.4, 11);
  const Graph pattern = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(contains_subgraph(host, pattern));
}
BENCHMARK(BM_Containment)->Arg(4)->Arg(6)->Arg(8);

void BM_CountCliques(benchmark::State& state) {
  const Graph g = random_graph(40, 0.5, 3);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, r));
}
BENCHMARK(BM_CountCliques)->DenseRange(3, 6);

}  // namespace
BENCHMARK_MAIN();
