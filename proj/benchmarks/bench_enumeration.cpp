#include <benchmark/benchmark.h>

#include "patgrid/enumeration.hpp"
#include "patgrid/transforms.hpp"

using namespace patgrid;

namespace {

void BM_PermutationsGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiding_permutations(n, {1, 3, 4, 2}));
}
BENCHMARK(BM_PermutationsGraph)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PermutationsDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_avoiding_permutations(n, {1, 3, 4, 2}, CountMethod::direct));
}
BENCHMARK(BM_PermutationsDirect)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Partitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_partitions(n, 3, PartitionMode::noncrossing));
}
BENCHMARK(BM_Partitions)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HypergraphsC6(benchmark::State& state) {
  CountQuery q{HypergraphFamily::c6, static_cast<int>(state.range(0)),
               permutation_graph({1, 2}).as_hypergraph()};
  for (auto _ : state) benchmark::DoNotOptimize(count_hypergraphs(q));
}
BENCHMARK(BM_HypergraphsC6)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
