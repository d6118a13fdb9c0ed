#pragma once

// Exhaustive counting of pattern avoiders: permutations (Stanley-Wilf),
// words, hypergraph families C1/C2/C5/C6 and k-noncrossing / k-nonnesting
// set partitions.  Counts are exact and do not depend on the worker count.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "patgrid/bigint.hpp"
#include "patgrid/core.hpp"

namespace patgrid {

enum class CountMethod {
  graph_encoding,  // contains_graph on P(.) style encodings
  direct,          // subsequence matcher on one-line notation
};

struct CountOptions {
  int workers = 1;
  int max_n = 0;  // 0: per-family default cap
};

/// True when seq has a subsequence order-isomorphic to pi (equal letters
/// never form part of a copy).
bool contains_pattern(const std::vector<int>& seq, const Permutation& pi);

BigInt count_avoiding_permutations(int n, const Permutation& pi,
                                   CountMethod method = CountMethod::graph_encoding,
                                   const CountOptions& options = {});

/// Words of length n over [n] avoiding pi.  The graph route encodes a word w
/// as the graph on [2n] with edges {i, n + w_i}.
BigInt count_avoiding_words(int n, const Permutation& pi,
                            CountMethod method = CountMethod::graph_encoding,
                            const CountOptions& options = {});

/// Graph {i, n + w_i} on [2n] used by the word count.
OrderedGraph word_graph(const std::vector<int>& word);

enum class HypergraphFamily {
  c1,  // simple, covering [n]
  c2,  // simple, covering [n], maximal under adding one new edge
  c5,  // simple, weight n
  c6,  // all multisets, weight n
};

struct CountQuery {
  HypergraphFamily family = HypergraphFamily::c1;
  int n = 1;  // vertices for C1/C2, weight for C5/C6
  OrderedHypergraph pattern;
};

BigInt count_hypergraphs(const CountQuery& query, const CountOptions& options = {});

enum class PartitionMode { noncrossing, nonnesting };

/// Set partitions of [n] whose path graph avoids P(12..k) (noncrossing) or
/// P(k..21) (nonnesting).
BigInt count_partitions(int n, int k, PartitionMode mode, const CountOptions& options = {});

/// Restricted growth strings of length n (block labels 0-based).
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

enum class Family {
  permutations,
  words,
  partitions_noncrossing,
  partitions_nonnesting,
  hypergraphs_c1,
  hypergraphs_c2,
  hypergraphs_c5,
  hypergraphs_c6,
};

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

struct GrowthRow {
  int n = 0;
  BigInt count;
  double root = 0.0;  // count^(1/n)
};

struct GrowthReport {
  Family family{};
  std::vector<GrowthRow> rows;
  std::vector<std::string> footnotes;
};

/// Counts for n = 1..n_max.  `pi` is the forbidden permutation; partition
/// families use `k` instead.  No convergence claim is made.
GrowthReport growth_report(Family family, const Permutation& pi, int k, int n_max,
                           const CountOptions& options = {});

/// 9^((3^(2k) + 2k) w): the weight-w bound on avoiders of P(pi), |pi| = k.
BigInt klazar_weight_bound(int k, int weight);

/// Locale-independent CSV with header n,count,root.
std::string to_csv(const GrowthReport& report);

}  // namespace patgrid
