#include <benchmark/benchmark.h>

#include "stairbound/adversary.hpp"

using namespace stairbound;

namespace {

Graph complete(int n) { return generate(GraphFamily::complete, {.n = n}, 0); }

void BM_shortest_path_system(benchmark::State& state) {
  Graph g = generate(GraphFamily::hypercube, {.dim = static_cast<int>(state.range(0))}, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_path_system(g));
}
BENCHMARK(BM_shortest_path_system)->Arg(3)->Arg(4)->Arg(5);

void BM_expansion_exact(benchmark::State& state) {
  Graph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(expansion_exact(g));
}
BENCHMARK(BM_expansion_exact)->Arg(8)->Arg(12)->Arg(16);

void BM_family_construction(benchmark::State& state) {
  Graph g = complete(static_cast<int>(state.range(0)));
  PathSystem ps = shortest_path_system(g);
  int L = state.range(0) == 9 ? 3 : 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(InstanceFamily(g, ps, L));
}
BENCHMARK(BM_family_construction)->Arg(4)->Arg(9);

void BM_nu_value(benchmark::State& state) {
  Graph g = complete(9);
  InstanceFamily fam(g, shortest_path_system(g), 3);
  FunctionLabel f1{make_milestones({1, 2, 3, 4}, 9), 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(nu_value(f1, 5, fam));
}
BENCHMARK(BM_nu_value);

void BM_adversary_bound(benchmark::State& state) {
  Graph g = complete(static_cast<int>(state.range(0)));
  int L = state.range(0) == 9 ? 3 : 2;
  for (auto _ : state) {
    // rebuild the family each round so the lazy tables are recomputed
    InstanceFamily fam(g, shortest_path_system(g), L);
    benchmark::DoNotOptimize(adversary_bound(fam));
  }
}
BENCHMARK(BM_adversary_bound)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_verify_weight_scheme(benchmark::State& state) {
  Graph g = complete(4);
  InstanceFamily fam(g, shortest_path_system(g), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_weight_scheme(fam));
}
BENCHMARK(BM_verify_weight_scheme);

}  // namespace

BENCHMARK_MAIN();
