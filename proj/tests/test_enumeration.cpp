#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "patgrid/enumeration.hpp"
#include "patgrid/transforms.hpp"

using namespace patgrid;

namespace {

// Simple covering hypergraphs on [n] avoiding the pattern; maximal ones
// admit no further edge over [n].
std::pair<std::uint64_t, std::uint64_t> naive_c1_c2(int n, const OrderedHypergraph& pattern) {
  const auto subsets = oracle::nonempty_subsets(n);
  std::uint64_t c1 = 0, c2 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (mask >> i & 1U) edges.push_back(subsets[i]);
    const OrderedHypergraph h(n, edges);
    if (!h.is_covering() || oracle::contains_hypergraph(pattern, h)) continue;
    ++c1;
    bool maximal = true;
    for (std::size_t i = 0; i < subsets.size() && maximal; ++i) {
      if (mask >> i & 1U) continue;
      auto more = edges;
      more.push_back(subsets[i]);
      maximal = oracle::contains_hypergraph(pattern, OrderedHypergraph(n, more)).has_value();
    }
    c2 += maximal;
  }
  return {c1, c2};
}

// Covering multisets over [v], v = 1..w, of total weight w.
std::uint64_t naive_weight_family(int w, const OrderedHypergraph& pattern, bool simple) {
  std::uint64_t count = 0;
  for (int v = 1; v <= w; ++v) {
    const auto subsets = oracle::nonempty_subsets(v);
    std::vector<Edge> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      if (left == 0) {
        const OrderedHypergraph h(v, chosen);
        if (h.is_covering() && !oracle::contains_hypergraph(pattern, h)) ++count;
        return;
      }
      for (std::size_t i = from; i < subsets.size(); ++i) {
        const int s = static_cast<int>(subsets[i].size());
        if (s > left) continue;
        chosen.push_back(subsets[i]);
        rec(simple ? i + 1 : i, left - s);
        chosen.pop_back();
      }
    };
    rec(0, w);
  }
  return count;
}

}  // namespace

TEST_CASE("subsequence matcher") {
  CHECK(contains_pattern({1, 3, 2}, {1, 2}));
  CHECK_FALSE(contains_pattern({3, 2, 1}, {1, 2}));
  CHECK_FALSE(contains_pattern({2, 2}, {1, 2}));
  CHECK(contains_pattern({2, 4, 1, 3}, {2, 1}));
  CHECK(contains_pattern({5, 1, 4, 2, 3}, {1, 3, 2}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<int> w(1 + rng() % 7);
    for (auto& x : w) x = 1 + static_cast<int>(rng() % 5);
    Permutation pi(1 + rng() % 4);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    CHECK(contains_pattern(w, pi) == oracle::has_pattern(w, pi));
  }
}

TEST_CASE("permutation avoiders") {
  const std::uint64_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
  const std::uint64_t p1342[] = {1, 2, 6, 23, 103, 512, 2740, 15485};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_avoiding_permutations(n, {1, 2, 3}) == catalan[n - 1]);
    CHECK(count_avoiding_permutations(n, {1, 2, 3}, CountMethod::direct) == catalan[n - 1]);
    CHECK(count_avoiding_permutations(n, {2, 3, 1}) == oracle::count_perm_avoiders(n, {2, 3, 1}));
  }
  for (int n = 1; n <= 8; ++n) CHECK(count_avoiding_permutations(n, {1, 3, 4, 2}) == p1342[n - 1]);
}

TEST_CASE("word avoiders") {
  const std::uint64_t w12[] = {1, 3, 10, 35, 126};
  const std::uint64_t w123[] = {1, 4, 26, 210, 1897};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_avoiding_words(n, {1, 2}) == w12[n - 1]);
    CHECK(count_avoiding_words(n, {2, 1}) == w12[n - 1]);
    CHECK(count_avoiding_words(n, {1, 2, 3}) == w123[n - 1]);
    CHECK(count_avoiding_words(n, {1, 2, 3}, CountMethod::direct) == w123[n - 1]);
    CHECK(count_avoiding_words(n, {1, 3, 2}) == oracle::count_word_avoiders(n, {1, 3, 2}));
  }
  CHECK(word_graph({2, 1}) == OrderedGraph(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("partition avoiders") {
  const std::uint64_t k2[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  const std::uint64_t k3[] = {1, 2, 5, 15, 52, 202, 859, 3930};
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_partitions(n, 2, PartitionMode::noncrossing) == k2[n - 1]);
    CHECK(count_partitions(n, 2, PartitionMode::nonnesting) == k2[n - 1]);
    CHECK(count_partitions(n, 3, PartitionMode::noncrossing) == k3[n - 1]);
    CHECK(count_partitions(n, 3, PartitionMode::nonnesting) == k3[n - 1]);
  }
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_partitions(n, 2, PartitionMode::noncrossing) ==
          oracle::count_partition_avoiders(n, 2, false));
    CHECK(count_partitions(n, 3, PartitionMode::nonnesting) ==
          oracle::count_partition_avoiders(n, 3, true));
  }
  std::size_t bell = 0;
  for_each_set_partition(5, [&](const std::vector<int>&) { ++bell; });
  CHECK(bell == 52);
}

TEST_CASE("counts do not depend on the worker count") {
  CountOptions four;
  four.workers = 4;
  CHECK(count_avoiding_permutations(7, {1, 3, 2}, CountMethod::graph_encoding, four) == 429);
  CHECK(count_avoiding_words(5, {1, 2, 3}, CountMethod::graph_encoding, four) == 1897);
  CHECK(count_partitions(8, 3, PartitionMode::noncrossing, four) == 3930);
  CountQuery q{HypergraphFamily::c6, 5, permutation_graph({1, 2}).as_hypergraph()};
  CHECK(count_hypergraphs(q, four) == count_hypergraphs(q));
}

TEST_CASE("hypergraph families against naive enumeration") {
  for (const Permutation& pi : {Permutation{1}, Permutation{1, 2}, Permutation{2, 1}}) {
    const auto pattern = permutation_graph(pi).as_hypergraph();
    for (int n = 1; n <= 4; ++n) {
      const auto [c1, c2] = naive_c1_c2(n, pattern);
      CHECK(count_hypergraphs({HypergraphFamily::c1, n, pattern}) == c1);
      CHECK(count_hypergraphs({HypergraphFamily::c2, n, pattern}) == c2);
    }
    for (int w = 1; w <= 5; ++w) {
      CHECK(count_hypergraphs({HypergraphFamily::c5, w, pattern}) ==
            naive_weight_family(w, pattern, true));
      CHECK(count_hypergraphs({HypergraphFamily::c6, w, pattern}) ==
            naive_weight_family(w, pattern, false));
    }
  }
}

TEST_CASE("hypergraph golden values") {
  const auto p12 = permutation_graph({1, 2}).as_hypergraph();
  const auto p21 = permutation_graph({2, 1}).as_hypergraph();
  const std::uint64_t c1[] = {1, 5, 109, 3625};
  const std::uint64_t c2[] = {1, 1, 1, 3};
  for (int n = 1; n <= 4; ++n) {
    CHECK(count_hypergraphs({HypergraphFamily::c1, n, p12}) == c1[n - 1]);
    CHECK(count_hypergraphs({HypergraphFamily::c2, n, p21}) == c2[n - 1]);
  }
  const std::uint64_t c5_12[] = {1, 2, 7, 27, 116, 526};
  const std::uint64_t c6_12[] = {1, 3, 10, 40, 174, 811};
  const std::uint64_t c5_21[] = {1, 2, 7, 27, 115, 508};
  const std::uint64_t c6_21[] = {1, 3, 10, 40, 173, 793};
  for (int w = 1; w <= 6; ++w) {
    CHECK(count_hypergraphs({HypergraphFamily::c5, w, p12}) == c5_12[w - 1]);
    CHECK(count_hypergraphs({HypergraphFamily::c6, w, p12}) == c6_12[w - 1]);
    CHECK(count_hypergraphs({HypergraphFamily::c5, w, p21}) == c5_21[w - 1]);
    CHECK(count_hypergraphs({HypergraphFamily::c6, w, p21}) == c6_21[w - 1]);
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(count_avoiding_permutations(11, {1, 2}), ResourceError);
  CHECK_THROWS_AS(count_avoiding_words(7, {1, 2}), ResourceError);
  CHECK_THROWS_AS(count_partitions(13, 2, PartitionMode::noncrossing), ResourceError);
  CHECK_THROWS_AS(count_hypergraphs({HypergraphFamily::c1, 5, OrderedHypergraph(1, {{1}})}),
                  ResourceError);
  CountOptions raised;
  raised.max_n = 11;
  CHECK(count_avoiding_permutations(11, {2, 1}, CountMethod::direct, raised) == 1);
  CHECK_THROWS(count_avoiding_permutations(0, {1, 2}));
  CHECK_THROWS(count_partitions(3, 1, PartitionMode::noncrossing));
}

TEST_CASE("growth report and csv") {
  const auto r = growth_report(Family::permutations, {1, 2, 3}, 3, 6);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.rows[5].count == 132);
  CHECK(r.rows[1].root == doctest::Approx(std::sqrt(2.0)));
  const auto csv = to_csv(r);
  CHECK(csv.rfind("n,count,root\n1,1,1.000000\n2,2,1.414214\n", 0) == 0);
  CHECK(csv.back() == '\n');
  const auto h = growth_report(Family::hypergraphs_c6, {1, 2}, 2, 4);
  CHECK(h.rows[3].count == 40);
  CHECK_FALSE(h.footnotes.empty());
  CHECK(growth_report(Family::partitions_nonnesting, {}, 3, 5).rows[4].count == 52);
  CHECK(parse_family("hypergraphs-C2") == Family::hypergraphs_c2);
  CHECK_FALSE(parse_family("trees"));
  CHECK(family_name(Family::words) == "words");
}

TEST_CASE("klazar weight bound") {
  CHECK(klazar_weight_bound(1, 1) == power(BigInt(9), 11));
  CHECK(klazar_weight_bound(2, 2) == power(BigInt(9), 2 * (81 + 4)));
}
