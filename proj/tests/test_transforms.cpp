#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "patgrid/containment.hpp"
#include "patgrid/transforms.hpp"

using namespace patgrid;

TEST_CASE("permutation graph") {
  CHECK(permutation_graph({1, 2}) == OrderedGraph(4, {{1, 3}, {2, 4}}));
  CHECK(permutation_graph({2, 3, 1}) == OrderedGraph(6, {{1, 5}, {2, 6}, {3, 4}}));
}

TEST_CASE("t-remainder") {
  const auto m = DMatrix::cube(3, 2, {{1, 1, 2}, {2, 1, 2}, {2, 2, 1}});
  CHECK(t_remainder(m, 1) == DMatrix::cube(2, 2, {{1, 2}, {2, 1}}));
  CHECK(t_remainder(m, 3) == DMatrix::cube(2, 2, {{1, 1}, {2, 1}, {2, 2}}));
  CHECK_THROWS(t_remainder(m, 4));
}

TEST_CASE("remainders of permutations are permutations with unique preimages") {
  for (int k = 1; k <= 3; ++k) {
    for (int d = 2; d <= 3; ++d) {
      for (const auto& p : enumerate_d_permutations(k, d)) {
        for (int t = 1; t <= d; ++t) {
          const auto rem = t_remainder(p.matrix(), t);
          CHECK_FALSE(validate_permutation(rem));
          CHECK(static_cast<int>(rem.size()) == k);
          for (const auto& r : rem.edges()) {
            int preimages = 0;
            for (auto e : p.edges()) {
              e.erase(e.begin() + (t - 1));
              preimages += e == r;
            }
            CHECK(preimages == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("contraction") {
  const auto m = DMatrix::cube(2, 4, {{1, 1}, {2, 4}, {4, 3}});
  CHECK(contract(m, IntervalPartition::singletons(4)) == m);
  CHECK(contract(m, IntervalPartition(4, {2, 4})) == DMatrix::cube(2, 2, {{1, 1}, {1, 2}, {2, 2}}));
  CHECK(contract(m, IntervalPartition(4, {4})) == DMatrix::cube(2, 1, {{1, 1}}));
  CHECK_THROWS(contract(m, IntervalPartition(4, {2, 5})));
}

TEST_CASE("contraction composes along coarsenings") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int d = 2 + static_cast<int>(rng() % 2);
    const auto m = oracle::random_matrix(rng, std::vector<int>(static_cast<std::size_t>(d), n), 0.4);
    std::vector<int> b1;
    for (int x = 1; x < n; ++x)
      if (rng() % 2) b1.push_back(x);
    b1.push_back(n);
    const IntervalPartition fine(n, b1);
    const int r = fine.count();
    std::vector<int> b2;
    for (int x = 1; x < r; ++x)
      if (rng() % 2) b2.push_back(x);
    b2.push_back(r);
    const IntervalPartition coarse(r, b2);
    std::vector<int> composed;
    for (int b : b2) composed.push_back(fine.hi(b));
    CHECK(contract(contract(m, fine), coarse) == contract(m, IntervalPartition(n, composed)));
  }
}

TEST_CASE("contractions of avoiders avoid") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % (d == 2 ? 6 : 4));
    const auto perms = enumerate_d_permutations(2, d);
    const auto& p = perms[rng() % perms.size()];
    auto m = oracle::random_matrix(rng, std::vector<int>(static_cast<std::size_t>(d), n), 0.4);
    if (!avoids_matrix(p.matrix(), m)) continue;
    std::vector<int> b;
    for (int x = 1; x < n; ++x)
      if (rng() % 2) b.push_back(x);
    b.push_back(n);
    CHECK(avoids_matrix(p.matrix(), contract(m, IntervalPartition(n, b))));
  }
}

TEST_CASE("lower bound construction") {
  const auto m = lower_bound_construction(3, 3);
  CHECK(m.size() == 9);
  for (const auto& e : m.edges()) CHECK(e[0] == 1);
  for (int k = 2; k <= 3; ++k)
    for (const auto& p : enumerate_d_permutations(k, 3)) CHECK(avoids_matrix(p.matrix(), m));
  CHECK(lower_bound_construction(4, 1).size() == 1);
  CHECK_THROWS(lower_bound_construction(0, 2));
}

TEST_CASE("blow-up") {
  const auto b = blow_up({2, 1}, 2);
  CHECK(b.bundle_size == 3);
  CHECK(b.graph.vertex_count() == 12);
  CHECK(b.graph.size() == 6);
  CHECK(b.permutation == Permutation{4, 5, 6, 1, 2, 3});
  CHECK(b.graph == permutation_graph(b.permutation));
  CHECK(b.bundle_of_edge == std::vector<int>{1, 1, 1, 2, 2, 2});
  CHECK(blow_up({1, 2, 3}, 1).graph == permutation_graph({1, 2, 3}));
  CHECK_THROWS(blow_up({1, 1}, 2));
  CHECK_THROWS(blow_up({1, 2}, 0));
}

TEST_CASE("one edge per bundle reproduces the pattern") {
  for (const Permutation& pi : {Permutation{1, 2}, Permutation{2, 1}, Permutation{2, 3, 1}}) {
    for (int m = 1; m <= 3; ++m) {
      const auto b = blow_up(pi, m);
      const auto k = pi.size();
      std::vector<std::size_t> pick(k, 0);
      const auto base = static_cast<std::size_t>(b.bundle_size);
      while (true) {
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < k; ++i) chosen.push_back(b.graph.edges()[i * base + pick[i]]);
        CHECK(compress(chosen) == permutation_graph(pi));
        std::size_t i = k;
        while (i > 0 && ++pick[i - 1] == base) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
}

TEST_CASE("rainbow copies") {
  const OrderedGraph p12(4, {{1, 3}, {2, 4}});
  const OrderedGraph host(4, {{1, 3}, {2, 4}});
  CHECK(find_rainbow_copy(p12, host, {1, 2}));
  CHECK_FALSE(find_rainbow_copy(p12, host, {1, 1}));
  CHECK_THROWS(find_rainbow_copy(p12, host, {1}));

  std::mt19937_64 rng(8);
  const auto b = blow_up({1, 2}, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> colors(b.graph.size());
    std::vector<int> uses(colors.size() + 1, 0);
    for (auto& c : colors) {
      do c = 1 + static_cast<int>(rng() % colors.size()); while (uses[c] == 2);
      ++uses[c];
    }
    const auto copy = find_rainbow_copy(permutation_graph({1, 2}), b.graph, colors);
    REQUIRE(copy);
    CHECK(is_embedding(permutation_graph({1, 2}), b.graph, *copy));
  }
}

TEST_CASE("partition path graphs") {
  const auto g = partition_to_path_graph({5, {{1, 3, 5}, {2, 4}}});
  CHECK(g == OrderedGraph(5, {{1, 3}, {3, 5}, {2, 4}}));
  CHECK_THROWS_AS(partition_to_path_graph({3, {{1, 2}, {2, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(partition_to_path_graph({3, {{1, 2}}}), std::invalid_argument);
}

TEST_CASE("compress") {
  CHECK(compress({{3, 9}, {5, 7}}) == OrderedGraph(4, {{1, 4}, {2, 3}}));
  CHECK(compress({{2, 5}, {5, 8}}) == OrderedGraph(3, {{1, 2}, {2, 3}}));
}
