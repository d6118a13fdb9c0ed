#include "patgrid/containment.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kernels.hpp"

namespace patgrid {

namespace detail {

MonotoneProblem matrix_problem(const DMatrix& pattern, const std::vector<int>& host_sides) {
  MonotoneProblem pb;
  pb.arity = pattern.dims();
  pb.slot_map.resize(static_cast<std::size_t>(pb.arity));
  std::iota(pb.slot_map.begin(), pb.slot_map.end(), 0);
  pb.domain = pattern.sides();
  pb.range = host_sides;
  pb.pattern = flatten(pattern);
  return pb;
}

MonotoneProblem graph_problem(const OrderedGraph& pattern, int host_vertices) {
  MonotoneProblem pb;
  pb.arity = 2;
  pb.slot_map = {0, 0};
  pb.domain = {pattern.vertex_count()};
  pb.range = {host_vertices};
  pb.pattern = flatten(pattern);
  return pb;
}

std::vector<int> flatten(const DMatrix& m) {
  std::vector<int> out;
  out.reserve(m.size() * static_cast<std::size_t>(m.dims()));
  for (const auto& p : m.edges()) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> flatten(const OrderedGraph& g) {
  std::vector<int> out;
  out.reserve(g.size() * 2);
  for (auto [a, b] : g.edges()) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------- hypergraphs

namespace {

std::vector<int> union_of(std::span<const Edge> edges) {
  std::vector<int> vs;
  for (const auto& e : edges) vs.insert(vs.end(), e.begin(), e.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<std::vector<int>> to_ranks(std::span<const Edge> edges, const std::vector<int>& vs) {
  std::vector<std::vector<int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<int> r;
    r.reserve(e.size());
    for (int v : e)
      r.push_back(static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()) + 1);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

HypergraphSearch::HypergraphSearch(const OrderedHypergraph& pattern) {
  pattern_vertices_ = union_of(pattern.edges());
  pattern_edges_ = to_ranks(pattern.edges(), pattern_vertices_);
  order_.resize(pattern_edges_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    if (pattern_edges_[a].size() != pattern_edges_[b].size())
      return pattern_edges_[a].size() > pattern_edges_[b].size();
    return pattern_edges_[a] < pattern_edges_[b];
  });
}

void HypergraphSearch::set_host(std::span<const Edge> host) {
  host_vertices_ = union_of(host);
  host_edges_ = to_ranks(host, host_vertices_);
}

void HypergraphSearch::clear_pins() {
  vertex_pins_.clear();
  edge_pins_.clear();
}

bool HypergraphSearch::pin_vertex(int pattern_rank, int host_rank) {
  vertex_pins_.emplace_back(pattern_rank, host_rank);
  return true;
}

bool HypergraphSearch::pin_edge(std::size_t pattern_edge, std::size_t host_edge) {
  edge_pins_.emplace_back(pattern_edge, host_edge);
  return true;
}

bool HypergraphSearch::feasible(int x, int y) const {
  const int p = pattern_order();
  const int q = static_cast<int>(host_vertices_.size());
  int lo = x;
  for (int below = x - 1; below >= 1; --below) {
    if (image_[below] != 0) {
      lo = image_[below] + (x - below);
      break;
    }
  }
  int hi = q - (p - x);
  for (int above = x + 1; above <= p; ++above) {
    if (image_[above] != 0) {
      hi = image_[above] - (above - x);
      break;
    }
  }
  return lo <= y && y <= hi;
}

bool HypergraphSearch::prepare() {
  const int p = pattern_order();
  const int q = static_cast<int>(host_vertices_.size());
  if (p > q || pattern_edges_.size() > host_edges_.size()) return false;
  image_.assign(static_cast<std::size_t>(p) + 2, 0);
  edge_image_.assign(pattern_edges_.size(), kNone);
  used_.assign(host_edges_.size(), 0);
  pinned_.assign(pattern_edges_.size(), 0);
  for (auto [x, y] : vertex_pins_) {
    if (x < 1 || x > p) return false;
    if (image_[x] != 0) {
      if (image_[x] != y) return false;
      continue;
    }
    if (!feasible(x, y)) return false;
    image_[x] = y;
  }
  for (auto [i, j] : edge_pins_) {
    if (i >= pattern_edges_.size() || j >= host_edges_.size()) return false;
    if (pinned_[i]) {
      if (edge_image_[i] != j) return false;
      continue;
    }
    if (used_[j]) return false;
    used_[j] = 1;
    pinned_[i] = 1;
    edge_image_[i] = j;
  }
  return true;
}

bool HypergraphSearch::find() { return prepare() && dfs(0); }

bool HypergraphSearch::find_using(std::size_t host_edge) {
  for (std::size_t i = 0; i < pattern_edges_.size(); ++i) {
    if (pattern_edges_[i].size() > host_edges_[host_edge].size()) continue;
    // Identical pattern edges are interchangeable; try the first copy only.
    if (i > 0 && pattern_edges_[i] == pattern_edges_[i - 1]) continue;
    clear_pins();
    pin_edge(i, host_edge);
    if (find()) return true;
  }
  clear_pins();
  return false;
}

bool HypergraphSearch::dfs(std::size_t i) {
  if (i == order_.size()) return true;
  const auto pe = order_[i];
  const auto& pedge = pattern_edges_[pe];
  if (pinned_[pe]) return match(pedge, host_edges_[edge_image_[pe]], 0, i);
  for (std::size_t j = 0; j < host_edges_.size(); ++j) {
    if (used_[j] || host_edges_[j].size() < pedge.size()) continue;
    used_[j] = 1;
    edge_image_[pe] = j;
    if (match(pedge, host_edges_[j], 0, i)) return true;
    edge_image_[pe] = kNone;
    used_[j] = 0;
  }
  return false;
}

bool HypergraphSearch::match(const std::vector<int>& pe, const std::vector<int>& he,
                             std::size_t idx, std::size_t i) {
  if (idx == pe.size()) return dfs(i + 1);
  const int x = pe[idx];
  if (image_[x] != 0) {
    return std::binary_search(he.begin(), he.end(), image_[x]) && match(pe, he, idx + 1, i);
  }
  for (int y : he) {
    if (!feasible(x, y)) continue;
    image_[x] = y;
    if (match(pe, he, idx + 1, i)) return true;
    image_[x] = 0;
  }
  return false;
}

std::vector<int> HypergraphSearch::vertex_images() const {
  const int p = pattern_order();
  std::vector<int> out(static_cast<std::size_t>(p));
  int prev = 0;
  for (int x = 1; x <= p; ++x) {
    prev = image_[x] != 0 ? image_[x] : prev + 1;
    out[x - 1] = prev;
  }
  return out;
}

// ---------------------------------------------------------------------- grids

namespace {

class GridSearch {
 public:
  GridSearch(std::span<const int> host, int dims, int n, int k)
      : host_(host), d_(dims), n_(n), k_(k),
        count_(host.size() / static_cast<std::size_t>(dims)),
        block_(static_cast<std::size_t>(dims), std::vector<int>(static_cast<std::size_t>(n) + 1)),
        bounds_(static_cast<std::size_t>(dims)),
        prefix_(count_, 0) {}

  std::optional<std::vector<std::vector<int>>> run() {
    if (axis(0)) return bounds_;
    return std::nullopt;
  }

 private:
  bool axis(int t) {
    if (t == d_) return true;
    std::vector<int> cuts(static_cast<std::size_t>(k_ - 1));
    return choose(t, cuts, 0, 1);
  }

  // Chooses cut positions cuts[i..] from [first, n-1] in lexicographic order.
  bool choose(int t, std::vector<int>& cuts, std::size_t i, int first) {
    if (i == cuts.size()) return check_and_descend(t, cuts);
    const int remaining = static_cast<int>(cuts.size() - i);
    for (int c = first; c <= n_ - remaining; ++c) {
      cuts[i] = c;
      if (choose(t, cuts, i + 1, c + 1)) return true;
    }
    return false;
  }

  bool check_and_descend(int t, const std::vector<int>& cuts) {
    auto& blk = block_[t];
    int j = 0;
    for (int x = 1; x <= n_; ++x) {
      while (j < static_cast<int>(cuts.size()) && x > cuts[j]) ++j;
      blk[x] = j;
    }
    // Cells of the first t+1 axes are indexed in mixed radix k.
    std::size_t cells = 1;
    for (int s = 0; s <= t; ++s) cells *= static_cast<std::size_t>(k_);
    std::vector<char> hit(cells, 0);
    std::size_t covered = 0;
    std::vector<std::size_t> saved(prefix_);
    for (std::size_t e = 0; e < count_; ++e) {
      const int v = host_[e * static_cast<std::size_t>(d_) + static_cast<std::size_t>(t)];
      prefix_[e] = prefix_[e] * static_cast<std::size_t>(k_) + static_cast<std::size_t>(blk[v]);
      if (!hit[prefix_[e]]) {
        hit[prefix_[e]] = 1;
        ++covered;
      }
    }
    if (covered == cells) {
      bounds_[t] = cuts;
      bounds_[t].push_back(n_);
      if (axis(t + 1)) return true;
    }
    prefix_ = std::move(saved);
    return false;
  }

  std::span<const int> host_;
  int d_;
  int n_;
  int k_;
  std::size_t count_;
  std::vector<std::vector<int>> block_;
  std::vector<std::vector<int>> bounds_;
  std::vector<std::size_t> prefix_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_grid_boundaries(std::span<const int> host,
                                                                  int dims, int n, int k) {
  if (k < 1 || k > n || host.empty()) return std::nullopt;
  return GridSearch(host, dims, n, k).run();
}

}  // namespace detail

// ------------------------------------------------------------------ public API

namespace {

std::string int_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string format_embedding(const MatrixEmbedding& e) {
  std::string s;
  for (std::size_t t = 0; t < e.maps.size(); ++t) {
    if (t) s += ' ';
    s += "f" + std::to_string(t + 1) + "=" + int_list(e.maps[t]);
  }
  return s;
}

std::string format_embedding(const GraphEmbedding& e) { return "f=" + int_list(e.vertex_map); }

std::string format_embedding(const HypergraphEmbedding& e) {
  std::string s = "f=";
  for (std::size_t i = 0; i < e.pattern_vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.pattern_vertices[i]) + "->" + std::to_string(e.host_vertices[i]);
  }
  s += " g=";
  for (std::size_t i = 0; i < e.edge_map.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(i + 1) + "->" + std::to_string(e.edge_map[i] + 1);
  }
  return s;
}

std::optional<MatrixEmbedding> contains_matrix(const DMatrix& pattern, const DMatrix& host) {
  if (pattern.dims() != host.dims()) throw std::invalid_argument("dimension mismatch");
  if (pattern.size() > host.size()) return std::nullopt;
  const auto pb = detail::matrix_problem(pattern, host.sides());
  const auto flat = detail::flatten(host);
  auto maps = detail::lex_least_embedding(pb, flat);
  if (!maps) return std::nullopt;
  return MatrixEmbedding{std::move(*maps)};
}

bool avoids_matrix(const DMatrix& pattern, const DMatrix& host) {
  if (pattern.dims() != host.dims()) throw std::invalid_argument("dimension mismatch");
  if (pattern.size() > host.size()) return true;
  const auto pb = detail::matrix_problem(pattern, host.sides());
  const auto flat = detail::flatten(host);
  detail::MonotoneSearch search(pb);
  search.set_host(flat);
  return !search.find();
}

std::optional<GraphEmbedding> contains_graph(const OrderedGraph& pattern,
                                             const OrderedGraph& host) {
  if (pattern.size() > host.size()) return std::nullopt;
  const auto pb = detail::graph_problem(pattern, host.vertex_count());
  const auto flat = detail::flatten(host);
  auto maps = detail::lex_least_embedding(pb, flat);
  if (!maps) return std::nullopt;
  return GraphEmbedding{std::move(maps->front())};
}

bool avoids_graph(const OrderedGraph& pattern, const OrderedGraph& host) {
  if (pattern.size() > host.size()) return true;
  const auto pb = detail::graph_problem(pattern, host.vertex_count());
  const auto flat = detail::flatten(host);
  detail::MonotoneSearch search(pb);
  search.set_host(flat);
  return !search.find();
}

std::optional<HypergraphEmbedding> contains_hypergraph(const OrderedHypergraph& pattern,
                                                       const OrderedHypergraph& host) {
  detail::HypergraphSearch search(pattern);
  search.set_host(host.edges());
  if (!search.find()) return std::nullopt;
  auto images = search.vertex_images();
  auto edges = search.edge_images();

  // Refine towards the lexicographically least (f, g): fix f values in
  // vertex order, then g values in edge order.
  std::vector<std::pair<int, int>> vpins;
  std::vector<std::pair<std::size_t, std::size_t>> epins;
  auto probe = [&]() {
    search.clear_pins();
    for (auto [x, y] : vpins) search.pin_vertex(x, y);
    for (auto [i, j] : epins) search.pin_edge(i, j);
    return search.find();
  };
  const int p = search.pattern_order();
  for (int x = 1; x <= p; ++x) {
    const int lower = x == 1 ? 1 : images[x - 2] + 1;
    for (int y = lower; y < images[x - 1]; ++y) {
      vpins.emplace_back(x, y);
      if (probe()) {
        images = search.vertex_images();
        edges = search.edge_images();
        vpins.pop_back();
        break;
      }
      vpins.pop_back();
    }
    vpins.emplace_back(x, images[x - 1]);
  }
  for (std::size_t i = 0; i < search.pattern_size(); ++i) {
    for (std::size_t j = 0; j < edges[i]; ++j) {
      epins.emplace_back(i, j);
      if (probe()) {
        images = search.vertex_images();
        edges = search.edge_images();
        epins.pop_back();
        break;
      }
      epins.pop_back();
    }
    epins.emplace_back(i, edges[i]);
  }

  HypergraphEmbedding out;
  out.pattern_vertices = search.pattern_vertices();
  for (int r : images) out.host_vertices.push_back(search.host_vertices()[r - 1]);
  out.edge_map = std::move(edges);
  return out;
}

bool avoids_hypergraph(const OrderedHypergraph& pattern, const OrderedHypergraph& host) {
  detail::HypergraphSearch search(pattern);
  search.set_host(host.edges());
  return !search.find();
}

std::vector<Point> image_of(const DMatrix& pattern, const MatrixEmbedding& e) {
  std::vector<Point> out;
  for (const auto& p : pattern.edges()) {
    Point q(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) q[t] = e.maps[t][p[t] - 1];
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

bool strictly_increasing_within(const std::vector<int>& f, int lo, int hi) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < lo || f[i] > hi) return false;
    if (i && f[i] <= f[i - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_embedding(const DMatrix& pattern, const DMatrix& host, const MatrixEmbedding& e) {
  if (static_cast<int>(e.maps.size()) != pattern.dims() || pattern.dims() != host.dims())
    return false;
  for (int t = 1; t <= pattern.dims(); ++t) {
    const auto& f = e.maps[t - 1];
    if (static_cast<int>(f.size()) != pattern.side(t)) return false;
    if (!strictly_increasing_within(f, 1, host.side(t))) return false;
  }
  for (const auto& q : image_of(pattern, e))
    if (!host.has_edge(q)) return false;
  return true;
}

bool is_embedding(const OrderedGraph& pattern, const OrderedGraph& host, const GraphEmbedding& e) {
  const auto& f = e.vertex_map;
  if (static_cast<int>(f.size()) != pattern.vertex_count()) return false;
  if (!strictly_increasing_within(f, 1, host.vertex_count())) return false;
  for (auto [a, b] : pattern.edges())
    if (!host.has_edge(f[a - 1], f[b - 1])) return false;
  return true;
}

bool is_embedding(const OrderedHypergraph& pattern, const OrderedHypergraph& host,
                  const HypergraphEmbedding& e) {
  if (e.pattern_vertices != pattern.vertex_set()) return false;
  if (e.host_vertices.size() != e.pattern_vertices.size()) return false;
  if (!strictly_increasing_within(e.host_vertices, 1, std::numeric_limits<int>::max()))
    return false;
  if (e.edge_map.size() != pattern.size()) return false;
  std::set<std::size_t> targets(e.edge_map.begin(), e.edge_map.end());
  if (targets.size() != e.edge_map.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (e.edge_map[i] >= host.size()) return false;
    const auto& he = host.edges()[e.edge_map[i]];
    for (int v : pattern.edges()[i]) {
      auto it = std::lower_bound(e.pattern_vertices.begin(), e.pattern_vertices.end(), v);
      const int img = e.host_vertices[static_cast<std::size_t>(it - e.pattern_vertices.begin())];
      if (!std::binary_search(he.begin(), he.end(), img)) return false;
    }
  }
  return true;
}

std::optional<std::vector<IntervalPartition>> find_grid(const DMatrix& host, int k) {
  if (!host.is_cube()) throw std::invalid_argument("find_grid requires equal sides");
  const int n = host.side(1);
  const auto flat = detail::flatten(host);
  auto bounds = detail::find_grid_boundaries(flat, host.dims(), n, k);
  if (!bounds) return std::nullopt;
  std::vector<IntervalPartition> out;
  for (auto& b : *bounds) out.emplace_back(n, std::move(b));
  return out;
}

}  // namespace patgrid
