#pragma once

// Brute-force reference implementations.  Nothing here calls into the
// search kernels of the library; only the plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "patgrid/containment.hpp"
#include "patgrid/core.hpp"

namespace oracle {

using patgrid::DMatrix;
using patgrid::Edge;
using patgrid::OrderedGraph;
using patgrid::OrderedHypergraph;
using patgrid::Permutation;
using patgrid::Point;

/// Increasing maps [k] -> [n] in lexicographic order.
inline std::vector<std::vector<int>> increasing_maps(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// Lexicographically least tuple of maps, scanning f_1 outermost.
inline std::optional<patgrid::MatrixEmbedding> contains_matrix(const DMatrix& pattern,
                                                               const DMatrix& host) {
  const int d = pattern.dims();
  std::set<Point> edges(host.edges().begin(), host.edges().end());
  std::vector<std::vector<std::vector<int>>> choices;
  for (int t = 1; t <= d; ++t) {
    choices.push_back(increasing_maps(pattern.side(t), host.side(t)));
    if (choices.back().empty()) return std::nullopt;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    bool ok = true;
    for (const auto& e : pattern.edges()) {
      Point img(static_cast<std::size_t>(d));
      for (int t = 0; t < d; ++t) img[t] = choices[t][idx[t]][e[t] - 1];
      if (!edges.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      patgrid::MatrixEmbedding emb;
      for (int t = 0; t < d; ++t) emb.maps.push_back(choices[t][idx[t]]);
      return emb;
    }
    int t = d - 1;
    while (t >= 0 && ++idx[t] == choices[t].size()) idx[t--] = 0;
    if (t < 0) return std::nullopt;
  }
}

inline std::optional<patgrid::GraphEmbedding> contains_graph(const OrderedGraph& pattern,
                                                             const OrderedGraph& host) {
  for (const auto& f : increasing_maps(pattern.vertex_count(), host.vertex_count())) {
    bool ok = true;
    for (auto [a, b] : pattern.edges()) {
      if (!host.has_edge(f[a - 1], f[b - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return patgrid::GraphEmbedding{f};
  }
  return std::nullopt;
}

/// f ranges over increasing maps of V(H') in lex order; for each f the
/// lex-least injective edge assignment g is searched by backtracking.
inline std::optional<patgrid::HypergraphEmbedding> contains_hypergraph(
    const OrderedHypergraph& pattern, const OrderedHypergraph& host) {
  const auto pv = pattern.vertex_set();
  const auto hv = host.vertex_set();
  const auto& pe = pattern.edges();
  const auto& he = host.edges();
  if (pe.size() > he.size()) return std::nullopt;
  for (const auto& ranks : increasing_maps(static_cast<int>(pv.size()), static_cast<int>(hv.size()))) {
    std::map<int, int> f;
    for (std::size_t i = 0; i < pv.size(); ++i) f[pv[i]] = hv[ranks[i] - 1];
    std::vector<std::size_t> g(pe.size());
    std::vector<char> used(he.size(), 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
      if (i == pe.size()) return true;
      Edge img;
      for (int v : pe[i]) img.push_back(f[v]);
      for (std::size_t j = 0; j < he.size(); ++j) {
        if (used[j]) continue;
        if (!std::includes(he[j].begin(), he[j].end(), img.begin(), img.end())) continue;
        used[j] = 1;
        g[i] = j;
        if (assign(i + 1)) return true;
        used[j] = 0;
      }
      return false;
    };
    if (assign(0)) {
      patgrid::HypergraphEmbedding emb;
      emb.pattern_vertices = pv;
      for (int v : pv) emb.host_vertices.push_back(f[v]);
      emb.edge_map = g;
      return emb;
    }
  }
  return std::nullopt;
}

/// Lexicographically least per-axis boundary lists (cuts plus n) for which
/// every cell is occupied.
inline std::optional<std::vector<std::vector<int>>> grid_boundaries(const DMatrix& host, int k) {
  const int d = host.dims();
  const int n = host.side(1);
  const auto cuts = increasing_maps(k - 1, n - 1);
  if (cuts.empty()) return std::nullopt;
  std::size_t cells = 1;
  for (int t = 0; t < d; ++t) cells *= static_cast<std::size_t>(k);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::set<Point> occupied;
    for (const auto& e : host.edges()) {
      Point b(static_cast<std::size_t>(d));
      for (int t = 0; t < d; ++t) {
        const auto& c = cuts[idx[t]];
        b[t] = static_cast<int>(std::lower_bound(c.begin(), c.end(), e[t]) - c.begin());
      }
      occupied.insert(b);
    }
    if (occupied.size() == cells) {
      std::vector<std::vector<int>> out;
      for (int t = 0; t < d; ++t) {
        out.push_back(cuts[idx[t]]);
        out.back().push_back(n);
      }
      return out;
    }
    int t = d - 1;
    while (t >= 0 && ++idx[t] == cuts.size()) idx[t--] = 0;
    if (t < 0) return std::nullopt;
  }
}

inline bool has_grid(const DMatrix& host, int k) { return grid_boundaries(host, k).has_value(); }

inline std::vector<Point> cube_cells(int n, int d) {
  std::vector<Point> cells;
  if (n <= 0) return cells;
  Point p(static_cast<std::size_t>(d), 1);
  while (true) {
    cells.push_back(p);
    int a = d - 1;
    while (a >= 0 && p[a] == n) p[a--] = 1;
    if (a < 0) break;
    ++p[a];
  }
  return cells;
}

/// Largest subset of `items` (at most 24) on which `bad` is false, where
/// bad is monotone.  Plain subset scan.
template <class Item, class Bad>
std::int64_t max_good_subset(const std::vector<Item>& items, Bad&& bad,
                             const std::function<std::int64_t(const std::vector<Item>&)>& weight) {
  std::int64_t best = 0;
  const auto count = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<Item> chosen;
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1U) chosen.push_back(items[i]);
    const auto w = weight(chosen);
    if (w <= best) continue;
    if (!bad(chosen)) best = w;
  }
  return best;
}

inline std::int64_t f_brute(int n, const DMatrix& pattern) {
  const int d = pattern.dims();
  return max_good_subset<Point>(
      cube_cells(n, d),
      [&](const std::vector<Point>& c) {
        return oracle::contains_matrix(pattern, DMatrix::cube(d, n, c)).has_value();
      },
      [](const std::vector<Point>& c) { return static_cast<std::int64_t>(c.size()); });
}

inline std::int64_t g_brute(int n, int k, int d) {
  return max_good_subset<Point>(
      cube_cells(n, d),
      [&](const std::vector<Point>& c) { return has_grid(DMatrix::cube(d, n, c), k); },
      [](const std::vector<Point>& c) { return static_cast<std::int64_t>(c.size()); });
}

inline std::int64_t gex_brute(int n, const OrderedGraph& pattern) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  return max_good_subset<std::pair<int, int>>(
      pairs,
      [&](const std::vector<std::pair<int, int>>& c) {
        return oracle::contains_graph(pattern, OrderedGraph(n, c)).has_value();
      },
      [](const std::vector<std::pair<int, int>>& c) { return static_cast<std::int64_t>(c.size()); });
}

inline std::vector<Edge> nonempty_subsets(int n) {
  std::vector<Edge> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    Edge e;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1U) e.push_back(v);
    out.push_back(e);
  }
  return out;
}

/// ex over simple hypergraphs on [n]; by_weight selects incidences.
inline std::int64_t ex_brute(int n, const OrderedHypergraph& pattern, bool by_weight) {
  return max_good_subset<Edge>(
      nonempty_subsets(n),
      [&](const std::vector<Edge>& c) {
        return oracle::contains_hypergraph(pattern, OrderedHypergraph(n, c)).has_value();
      },
      [&](const std::vector<Edge>& c) {
        std::int64_t w = 0;
        for (const auto& e : c) w += by_weight ? static_cast<std::int64_t>(e.size()) : 1;
        return w;
      });
}

/// Positions chosen as a k-subset; the letters must be order-isomorphic to pi.
inline bool has_pattern(const std::vector<int>& seq, const Permutation& pi) {
  const int k = static_cast<int>(pi.size());
  for (const auto& pos : increasing_maps(k, static_cast<int>(seq.size()))) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b)
        if ((pi[a] < pi[b]) != (seq[pos[a] - 1] < seq[pos[b] - 1])) ok = false;
    if (ok) return true;
  }
  return false;
}

inline std::uint64_t count_perm_avoiders(int n, const Permutation& pi) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  std::uint64_t c = 0;
  do {
    if (!has_pattern(s, pi)) ++c;
  } while (std::next_permutation(s.begin(), s.end()));
  return c;
}

inline std::uint64_t count_word_avoiders(int n, const Permutation& pi) {
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  std::uint64_t c = 0;
  while (true) {
    if (!has_pattern(w, pi)) ++c;
    int i = n - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return c;
}

/// Set partitions as block label vectors; arcs join consecutive block
/// members.  k-crossing: i_1 < ... < i_k < j_1 < ... < j_k; k-nesting:
/// i_1 < ... < i_k < j_k < ... < j_1.
inline std::uint64_t count_partition_avoiders(int n, int k, bool nesting) {
  std::uint64_t count = 0;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<std::pair<int, int>> arcs;
      std::map<int, int> last;
      for (int x = 0; x < n; ++x) {
        if (last.count(label[x])) arcs.emplace_back(last[label[x]], x);
        last[label[x]] = x;
      }
      std::sort(arcs.begin(), arcs.end());
      bool bad = false;
      for (const auto& pick : increasing_maps(k, static_cast<int>(arcs.size()))) {
        bool ok = arcs[pick[k - 1] - 1].first < arcs[pick[0] - 1].second;
        for (int a = 0; a + 1 < k && ok; ++a) {
          const auto& p = arcs[pick[a] - 1];
          const auto& q = arcs[pick[a + 1] - 1];
          ok = p.first < q.first && (nesting ? q.second < p.second : p.second < q.second);
        }
        if (ok) {
          bad = true;
          break;
        }
      }
      if (!bad) ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

// ---------------------------------------------------------------- random

inline DMatrix random_matrix(std::mt19937_64& rng, std::vector<int> sides, double density) {
  std::vector<Point> edges;
  std::bernoulli_distribution coin(density);
  Point p(sides.size(), 1);
  bool empty = false;
  for (int s : sides) empty = empty || s <= 0;
  while (!empty) {
    if (coin(rng)) edges.push_back(p);
    int a = static_cast<int>(sides.size()) - 1;
    while (a >= 0 && p[a] == sides[a]) p[a--] = 1;
    if (a < 0) break;
    ++p[a];
  }
  return DMatrix(std::move(sides), std::move(edges));
}

inline OrderedGraph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return OrderedGraph(n, std::move(edges));
}

/// Random multiset hypergraph on [n] with `edges` edges.
inline OrderedHypergraph random_hypergraph(std::mt19937_64& rng, int n, int edges,
                                           int max_edge_size) {
  std::vector<Edge> out;
  std::uniform_int_distribution<int> size_dist(1, std::min(n, max_edge_size));
  for (int i = 0; i < edges; ++i) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) verts[v] = v + 1;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(static_cast<std::size_t>(size_dist(rng)));
    std::sort(verts.begin(), verts.end());
    out.push_back(verts);
  }
  return OrderedHypergraph(n, std::move(out));
}

}  // namespace oracle
