#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "patgrid/containment.hpp"

using namespace patgrid;

TEST_CASE("matrix examples") {
  const auto id2 = DMatrix::cube(2, 2, {{1, 1}, {2, 2}});
  const auto host = DMatrix::cube(2, 3, {{1, 1}, {2, 3}, {3, 2}});
  const auto e = contains_matrix(id2, host);
  REQUIRE(e);
  CHECK(e->maps == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
  CHECK(format_embedding(*e) == "f1=1,2 f2=1,3");
  CHECK(is_embedding(id2, host, *e));

  const auto anti = DMatrix::cube(2, 2, {{1, 2}, {2, 1}});
  CHECK_FALSE(contains_matrix(anti, DMatrix::cube(2, 3, {{1, 1}, {2, 2}, {3, 3}})));
  CHECK(avoids_matrix(anti, DMatrix::cube(2, 3, {{1, 1}, {2, 2}, {3, 3}})));
  CHECK_THROWS_AS(contains_matrix(id2, DMatrix::cube(3, 2)), std::invalid_argument);
}

TEST_CASE("graph examples") {
  const OrderedGraph p12(4, {{1, 3}, {2, 4}});
  const auto e = contains_graph(p12, OrderedGraph(4, {{1, 3}, {2, 4}, {1, 2}}));
  REQUIRE(e);
  CHECK(e->vertex_map == std::vector<int>{1, 2, 3, 4});
  CHECK_FALSE(contains_graph(p12, OrderedGraph(3, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK(contains_graph(OrderedGraph(2, {{1, 2}}), OrderedGraph(5, {{3, 5}})));
}

TEST_CASE("hypergraph examples") {
  const auto e = contains_hypergraph(OrderedHypergraph(2, {{1, 2}}), OrderedHypergraph(3, {{1, 3}, {2}}));
  REQUIRE(e);
  CHECK(e->host_vertices == std::vector<int>{1, 3});
  CHECK(e->edge_map == std::vector<std::size_t>{0});
  CHECK(format_embedding(*e) == "f=1->1,2->3 g=1->1");
  CHECK_FALSE(contains_hypergraph(OrderedHypergraph(2, {{1}, {2}}), OrderedHypergraph(2, {{1, 2}})));
  // A simple host can contain a non-simple pattern.
  const OrderedHypergraph doubled(1, {{1}, {1}});
  CHECK(contains_hypergraph(doubled, OrderedHypergraph(2, {{1}, {1, 2}})));
  CHECK_FALSE(contains_hypergraph(doubled, OrderedHypergraph(2, {{1}, {2}})));
}

TEST_CASE("reflexivity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_matrix(rng, {4, 3}, 0.5);
    const auto e = contains_matrix(m, m);
    REQUIRE(e);
    CHECK(e->maps == std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 3}});
    const auto g = oracle::random_graph(rng, 6, 0.4);
    REQUIRE(contains_graph(g, g));
    const auto h = oracle::random_hypergraph(rng, 4, 4, 3);
    const auto he = contains_hypergraph(h, h);
    REQUIRE(he);
    CHECK(is_embedding(h, h, *he));
  }
}

TEST_CASE("optimized matchers agree with naive matchers") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1500; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    const int cap = d == 2 ? 6 : 4;
    std::vector<int> hs, ps;
    for (int t = 0; t < d; ++t) {
      hs.push_back(1 + static_cast<int>(rng() % cap));
      ps.push_back(1 + static_cast<int>(rng() % 3));
    }
    const auto host = oracle::random_matrix(rng, hs, 0.5);
    const auto pattern = oracle::random_matrix(rng, ps, 0.5);
    const auto fast = contains_matrix(pattern, host);
    const auto slow = oracle::contains_matrix(pattern, host);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->maps == slow->maps);
      CHECK(is_embedding(pattern, host, *fast));
    }
    CHECK(avoids_matrix(pattern, host) == !slow.has_value());
  }
  for (int trial = 0; trial < 1500; ++trial) {
    const auto host = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    const auto pattern = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    const auto fast = contains_graph(pattern, host);
    const auto slow = oracle::contains_graph(pattern, host);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->vertex_map == slow->vertex_map);
    CHECK(avoids_graph(pattern, host) == !slow.has_value());
  }
  for (int trial = 0; trial < 1500; ++trial) {
    const auto host = oracle::random_hypergraph(rng, 2 + static_cast<int>(rng() % 4),
                                                1 + static_cast<int>(rng() % 4), 3);
    if (host.weight() > 10) continue;
    const auto pattern = oracle::random_hypergraph(rng, 1 + static_cast<int>(rng() % 3),
                                                   1 + static_cast<int>(rng() % 3), 2);
    const auto fast = contains_hypergraph(pattern, host);
    const auto slow = oracle::contains_hypergraph(pattern, host);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(*fast == *slow);
      CHECK(is_embedding(pattern, host, *fast));
    }
    CHECK(avoids_hypergraph(pattern, host) == !slow.has_value());
  }
}

TEST_CASE("monotonicity and the size condition") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto host = oracle::random_matrix(rng, {5, 5}, 0.3);
    const auto pattern = oracle::random_matrix(rng, {3, 3}, 0.4);
    if (pattern.size() > host.size()) CHECK_FALSE(contains_matrix(pattern, host));
    if (!contains_matrix(pattern, host)) continue;
    auto bigger = host.edges();
    bigger.push_back({1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)});
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    CHECK(contains_matrix(pattern, DMatrix::cube(2, 5, bigger)));
    if (pattern.empty()) continue;
    auto smaller = pattern.edges();
    smaller.erase(smaller.begin() + static_cast<long>(rng() % smaller.size()));
    CHECK(contains_matrix(DMatrix::cube(2, 3, smaller), host));
  }
}

TEST_CASE("transitivity by composing witnesses") {
  std::mt19937_64 rng(5);
  int composed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = oracle::random_matrix(rng, {6, 6}, 0.6);
    const auto b = oracle::random_matrix(rng, {4, 4}, 0.6);
    const auto a = oracle::random_matrix(rng, {2, 2}, 0.6);
    const auto ab = contains_matrix(a, b);
    const auto bc = contains_matrix(b, c);
    if (!ab || !bc) continue;
    MatrixEmbedding ac;
    for (int t = 0; t < 2; ++t) {
      std::vector<int> f;
      for (int x : ab->maps[t]) f.push_back(bc->maps[t][x - 1]);
      ac.maps.push_back(f);
    }
    CHECK(is_embedding(a, c, ac));
    CHECK(contains_matrix(a, c));
    ++composed;
  }
  CHECK(composed > 10);
}

TEST_CASE("find_grid") {
  const auto full = DMatrix::cube(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  const auto parts = find_grid(full, 2);
  REQUIRE(parts);
  CHECK((*parts)[0] == IntervalPartition::singletons(2));
  CHECK((*parts)[1] == IntervalPartition::singletons(2));
  CHECK_FALSE(find_grid(DMatrix::cube(2, 2, {{1, 1}, {1, 2}, {2, 1}}), 2));
  CHECK(find_grid(DMatrix::cube(2, 3, {{1, 1}}), 1));
  CHECK_FALSE(find_grid(DMatrix::cube(2, 3), 1));
  CHECK_THROWS(find_grid(DMatrix({2, 3}, {}), 1));
}

TEST_CASE("find_grid agrees with the naive grid search and implies every permutation") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    const int k = d == 2 ? 2 + static_cast<int>(rng() % 2) : 2;
    const int n = k + static_cast<int>(rng() % (d == 2 ? 3 : 2));
    const auto host = oracle::random_matrix(rng, std::vector<int>(static_cast<std::size_t>(d), n), 0.5);
    const auto parts = find_grid(host, k);
    const auto expected = oracle::grid_boundaries(host, k);
    REQUIRE(parts.has_value() == expected.has_value());
    if (!parts) continue;
    for (int t = 0; t < d; ++t) {
      const auto& p = (*parts)[static_cast<std::size_t>(t)];
      CHECK_FALSE(validate(p));
      CHECK(p.boundaries() == (*expected)[static_cast<std::size_t>(t)]);
    }
    for (const auto& p : enumerate_d_permutations(k, d)) CHECK(contains_matrix(p.matrix(), host));
  }
}
