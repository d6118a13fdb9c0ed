#include <benchmark/benchmark.h>

#include <random>

#include "patgrid/containment.hpp"
#include "patgrid/transforms.hpp"

using namespace patgrid;

namespace {

DMatrix random_cube(std::mt19937_64& rng, int d, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Point> edges;
  Point p(static_cast<std::size_t>(d), 1);
  while (true) {
    if (coin(rng)) edges.push_back(p);
    int a = d - 1;
    while (a >= 0 && p[a] == n) p[a--] = 1;
    if (a < 0) break;
    ++p[a];
  }
  return DMatrix::cube(d, n, std::move(edges));
}

void BM_ContainsMatrix2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto host = random_cube(rng, 2, n, 0.3);
  const auto pattern = DPermutation::from_rows({{1, 2, 3, 4}, {2, 4, 1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(contains_matrix(pattern.matrix(), host));
}
BENCHMARK(BM_ContainsMatrix2D)->Arg(8)->Arg(16)->Arg(32);

void BM_AvoidsMatrix3D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto host = random_cube(rng, 3, n, 0.2);
  const auto pattern = DPermutation::from_rows({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(avoids_matrix(pattern.matrix(), host));
}
BENCHMARK(BM_AvoidsMatrix3D)->Arg(4)->Arg(6)->Arg(8);

void BM_ContainsGraph(benchmark::State& state) {
  const auto host = blow_up({2, 4, 1, 3}, static_cast<int>(state.range(0))).graph;
  const auto pattern = permutation_graph({3, 1, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(contains_graph(pattern, host));
}
BENCHMARK(BM_ContainsGraph)->Arg(2)->Arg(3)->Arg(4);

void BM_FindGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const auto host = random_cube(rng, 2, n, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(find_grid(host, 3));
}
BENCHMARK(BM_FindGrid)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
