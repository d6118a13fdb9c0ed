#include <benchmark/benchmark.h>

#include "patgrid/extremal.hpp"
#include "patgrid/transforms.hpp"

using namespace patgrid;

namespace {

void BM_SolveF2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = DPermutation::from_rows({{1, 2, 3}, {2, 3, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_f(n, p).optimum);
}
BENCHMARK(BM_SolveF2D)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SolveFWorst(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_f_worst(4, 3, 2).optimum);
}
BENCHMARK(BM_SolveFWorst)->Unit(benchmark::kMillisecond);

void BM_SolveG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_g(n, 2, 2).optimum);
}
BENCHMARK(BM_SolveG)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SolveGex(benchmark::State& state) {
  const auto pattern = permutation_graph({1, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(solve_gex(static_cast<int>(state.range(0)), pattern).optimum);
}
BENCHMARK(BM_SolveGex)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SolveEx(benchmark::State& state) {
  const auto pattern = permutation_graph({2, 1}).as_hypergraph();
  for (auto _ : state) benchmark::DoNotOptimize(solve_ex(4, pattern, ExMode::weight).optimum);
}
BENCHMARK(BM_SolveEx)->Unit(benchmark::kMillisecond);

}  // namespace
