#include "patgrid/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels.hpp"

namespace patgrid {

OrderedGraph permutation_graph(const Permutation& pi) {
  if (!is_permutation_of_k(pi)) throw std::invalid_argument("not a permutation of [k]");
  const int k = static_cast<int>(pi.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(pi.size());
  for (int i = 1; i <= k; ++i) edges.emplace_back(i, k + pi[i - 1]);
  return OrderedGraph(2 * k, std::move(edges));
}

DMatrix t_remainder(const DMatrix& m, int axis) {
  if (m.dims() < 2) throw std::invalid_argument("t-remainder needs d >= 2");
  if (axis < 1 || axis > m.dims()) throw std::invalid_argument("axis out of range");
  std::vector<int> sides = m.sides();
  sides.erase(sides.begin() + (axis - 1));
  std::vector<Point> edges;
  edges.reserve(m.size());
  for (const auto& p : m.edges()) {
    Point q = p;
    q.erase(q.begin() + (axis - 1));
    edges.push_back(std::move(q));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return DMatrix(std::move(sides), std::move(edges));
}

DMatrix contract(const DMatrix& m, const IntervalPartition& parts) {
  if (auto v = validate(parts)) throw std::invalid_argument("bad partition: " + *v);
  if (!m.is_cube() || m.side(1) != parts.ground_size())
    throw std::invalid_argument("contraction needs equal sides matching the partition");
  std::vector<Point> edges;
  edges.reserve(m.size());
  for (const auto& p : m.edges()) {
    Point q(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) q[t] = parts.block_of(p[t]);
    edges.push_back(std::move(q));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return DMatrix::cube(m.dims(), parts.count(), std::move(edges));
}

BlowUp blow_up(const Permutation& pi, int m) {
  if (!is_permutation_of_k(pi) || pi.empty()) throw std::invalid_argument("not a permutation");
  if (m < 1) throw std::invalid_argument("blow-up factor must be positive");
  const int k = static_cast<int>(pi.size());
  const int b = k * (m - 1) + 1;
  const int half = k * b;
  BlowUp out;
  out.bundle_size = b;
  out.permutation.resize(static_cast<std::size_t>(half));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    for (int r = 1; r <= b; ++r) {
      const int left = (i - 1) * b + r;
      const int right = (pi[i - 1] - 1) * b + r;
      out.permutation[left - 1] = right;
      edges.emplace_back(left, half + right);
    }
  }
  out.graph = OrderedGraph(2 * half, std::move(edges));
  // Edges are sorted by left endpoint, which runs bundle by bundle.
  for (int i = 1; i <= k; ++i)
    for (int r = 1; r <= b; ++r) out.bundle_of_edge.push_back(i);
  return out;
}

DMatrix lower_bound_construction(int n, int dims) {
  if (n < 1 || dims < 1) throw std::invalid_argument("n and d must be positive");
  std::vector<Point> edges;
  Point p(static_cast<std::size_t>(dims), 1);
  // Odometer over coordinates 2..d.
  while (true) {
    edges.push_back(p);
    int t = dims - 1;
    while (t >= 1 && p[t] == n) p[t--] = 1;
    if (t < 1) break;
    ++p[t];
  }
  return DMatrix::cube(dims, n, std::move(edges));
}

OrderedGraph partition_to_path_graph(const SetPartition& partition) {
  const int n = partition.n;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> edges;
  for (auto block : partition.blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int v = block[i];
      if (v < 1 || v > n) throw std::invalid_argument("element out of range");
      if (seen[v]) throw std::invalid_argument("blocks overlap at " + std::to_string(v));
      seen[v] = 1;
      if (i) edges.emplace_back(block[i - 1], v);
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("blocks do not cover " + std::to_string(v));
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph compress(const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> vs;
  for (auto [a, b] : edges) {
    vs.push_back(a);
    vs.push_back(b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()) + 1;
  };
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : edges) out.emplace_back(rank(a), rank(b));
  return OrderedGraph(static_cast<int>(vs.size()), std::move(out));
}

std::optional<GraphEmbedding> find_rainbow_copy(const OrderedGraph& pattern,
                                                const OrderedGraph& host,
                                                const std::vector<int>& edge_colors) {
  if (edge_colors.size() != host.size())
    throw std::invalid_argument("one color per host edge required");
  const auto pb = detail::graph_problem(pattern, host.vertex_count());
  const auto flat = detail::flatten(host);
  detail::MonotoneSearch search(pb);
  search.set_host(flat);
  bool found = false;
  std::vector<int> used;
  search.for_each([&](std::span<const std::size_t> chosen) {
    used.clear();
    for (auto h : chosen) used.push_back(edge_colors[h]);
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) return true;
    found = true;
    return false;
  });
  if (!found) return std::nullopt;
  return GraphEmbedding{search.maps().front()};
}

}  // namespace patgrid
