#include "patgrid/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace patgrid {

namespace {

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- DMatrix

DMatrix::DMatrix(std::vector<int> sides, std::vector<Point> edges)
    : sides_(std::move(sides)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

DMatrix DMatrix::cube(int dims, int n, std::vector<Point> edges) {
  return DMatrix(std::vector<int>(static_cast<std::size_t>(dims), n), std::move(edges));
}

bool DMatrix::has_edge(const Point& p) const {
  return std::binary_search(edges_.begin(), edges_.end(), p);
}

bool DMatrix::is_cube() const {
  return std::adjacent_find(sides_.begin(), sides_.end(), std::not_equal_to<>()) ==
         sides_.end();
}

std::optional<std::string> validate(const DMatrix& m) {
  if (m.dims() < 1) return "dimension must be positive";
  for (int t = 1; t <= m.dims(); ++t)
    if (m.side(t) < 1) return "side " + std::to_string(t) + " must be positive";
  const auto& e = m.edges();
  for (const auto& p : e) {
    if (static_cast<int>(p.size()) != m.dims())
      return "edge " + point_str(p) + " has wrong arity";
    for (int t = 0; t < m.dims(); ++t)
      if (p[t] < 1 || p[t] > m.sides()[t])
        return "coordinate out of range in edge " + point_str(p);
  }
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] == e[i - 1]) return "duplicate edge " + point_str(e[i]);
    if (e[i] < e[i - 1]) return "edges not sorted";
  }
  return std::nullopt;
}

std::optional<std::string> validate_permutation(const DMatrix& m) {
  if (auto v = validate(m)) return v;
  if (!m.is_cube()) return "sides are not all equal";
  const int k = m.side(1);
  for (int t = 1; t <= m.dims(); ++t) {
    std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& p : m.edges()) {
      if (++seen[p[t - 1]] > 1)
        return "axis " + std::to_string(t) + " value " + std::to_string(p[t - 1]) +
               " used twice";
    }
    for (int x = 1; x <= k; ++x)
      if (seen[x] == 0)
        return "axis " + std::to_string(t) + " value " + std::to_string(x) + " unused";
  }
  return std::nullopt;
}

// ----------------------------------------------------------- DPermutation

DPermutation::DPermutation(DMatrix m) : matrix_(std::move(m)) {
  if (auto v = validate_permutation(matrix_)) throw InvariantError("not a d-permutation: " + *v);
  k_ = matrix_.side(1);
}

DPermutation DPermutation::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw InvariantError("permutation needs at least one row");
  const auto k = rows.front().size();
  std::vector<Point> edges(k, Point(rows.size()));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != k) throw InvariantError("rows have unequal length");
    for (std::size_t x = 0; x < k; ++x) edges[x][t] = rows[t][x];
  }
  return DPermutation(DMatrix::cube(static_cast<int>(rows.size()), static_cast<int>(k),
                                    std::move(edges)));
}

DPermutation DPermutation::identity(int k, int dims) {
  std::vector<Point> edges;
  for (int x = 1; x <= k; ++x) edges.emplace_back(static_cast<std::size_t>(dims), x);
  return DPermutation(DMatrix::cube(dims, k, std::move(edges)));
}

namespace {

// Fills axes 2..d of edge x with unused values in lexicographic order.
class DPermutationWalker {
 public:
  DPermutationWalker(int k, int dims, const std::function<bool(const DPermutation&)>& visit)
      : k_(k), d_(dims), visit_(visit),
        used_(static_cast<std::size_t>(dims), std::vector<char>(static_cast<std::size_t>(k) + 1, 0)),
        edges_(static_cast<std::size_t>(k), Point(static_cast<std::size_t>(dims))) {
    for (int x = 1; x <= k; ++x) edges_[x - 1][0] = x;
  }

  bool run(int x, int axis) {
    if (x > k_) return visit_(DPermutation(DMatrix::cube(d_, k_, edges_)));
    if (axis >= d_) return run(x + 1, 1);
    for (int v = 1; v <= k_; ++v) {
      if (used_[axis][v]) continue;
      used_[axis][v] = 1;
      edges_[x - 1][axis] = v;
      const bool go_on = run(x, axis + 1);
      used_[axis][v] = 0;
      if (!go_on) return false;
    }
    return true;
  }

 private:
  int k_;
  int d_;
  const std::function<bool(const DPermutation&)>& visit_;
  std::vector<std::vector<char>> used_;
  std::vector<Point> edges_;
};

}  // namespace

void for_each_d_permutation(int k, int dims,
                            const std::function<bool(const DPermutation&)>& visit) {
  if (k < 1 || dims < 1) throw std::invalid_argument("k and d must be positive");
  DPermutationWalker walker(k, dims, visit);
  walker.run(1, 1);
}

std::uint64_t d_permutation_count(int k, int dims) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) {
    if (fact > kMax / static_cast<std::uint64_t>(i)) return kMax;
    fact *= static_cast<std::uint64_t>(i);
  }
  std::uint64_t total = 1;
  for (int t = 1; t < dims; ++t) {
    if (fact != 0 && total > kMax / fact) return kMax;
    total *= fact;
  }
  return total;
}

std::vector<DPermutation> enumerate_d_permutations(int k, int dims, std::uint64_t cap) {
  const auto count = d_permutation_count(k, dims);
  if (count > cap)
    throw ResourceError("(k!)^(d-1) = " + std::to_string(count) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<DPermutation> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_d_permutation(k, dims, [&](const DPermutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

// ------------------------------------------------------ OrderedHypergraph

OrderedHypergraph::OrderedHypergraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) std::sort(e.begin(), e.end());
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> OrderedHypergraph::vertex_set() const {
  std::vector<int> vs;
  for (const auto& e : edges_) vs.insert(vs.end(), e.begin(), e.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

int OrderedHypergraph::order() const { return static_cast<int>(vertex_set().size()); }

std::size_t OrderedHypergraph::weight() const {
  std::size_t w = 0;
  for (const auto& e : edges_) w += e.size();
  return w;
}

bool OrderedHypergraph::is_simple() const {
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

bool OrderedHypergraph::is_covering() const { return order() == n_; }

std::optional<std::string> validate(const OrderedHypergraph& h) {
  if (h.vertex_count() < 0) return "vertex count must be nonnegative";
  for (const auto& e : h.edges()) {
    if (e.empty()) return "empty edge";
    if (e.front() < 1 || e.back() > h.vertex_count()) return "vertex out of range";
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) return "repeated vertex in edge";
  }
  return std::nullopt;
}

// ----------------------------------------------------------- OrderedGraph

OrderedGraph::OrderedGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& [a, b] : edges_)
    if (a > b) std::swap(a, b);
  std::sort(edges_.begin(), edges_.end());
}

bool OrderedGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

OrderedHypergraph OrderedGraph::as_hypergraph() const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (auto [a, b] : edges_) es.push_back({a, b});
  return OrderedHypergraph(n_, std::move(es));
}

std::optional<std::string> validate(const OrderedGraph& g) {
  if (g.vertex_count() < 0) return "vertex count must be nonnegative";
  const auto& e = g.edges();
  for (auto [a, b] : e) {
    if (a == b) return "loop at vertex " + std::to_string(a);
    if (a < 1 || b > g.vertex_count()) return "vertex out of range";
  }
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] == e[i - 1])
      return "duplicate edge {" + std::to_string(e[i].first) + "," +
             std::to_string(e[i].second) + "}";
  return std::nullopt;
}

// ------------------------------------------------------ IntervalPartition

IntervalPartition::IntervalPartition(int n, std::vector<int> boundaries)
    : n_(n), bounds_(std::move(boundaries)) {}

IntervalPartition IntervalPartition::singletons(int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return IntervalPartition(n, std::move(b));
}

IntervalPartition IntervalPartition::uniform(int n, int width) {
  if (width < 1) throw std::invalid_argument("interval width must be positive");
  std::vector<int> b;
  for (int r = width; r < n; r += width) b.push_back(r);
  if (n > 0) b.push_back(n);
  return IntervalPartition(n, std::move(b));
}

int IntervalPartition::lo(int j) const { return j == 1 ? 1 : bounds_.at(j - 2) + 1; }

int IntervalPartition::hi(int j) const { return bounds_.at(j - 1); }

int IntervalPartition::block_of(int x) const {
  auto it = std::lower_bound(bounds_.begin(), bounds_.end(), x);
  if (x < 1 || it == bounds_.end()) throw std::out_of_range("value outside partitioned range");
  return static_cast<int>(it - bounds_.begin()) + 1;
}

std::optional<std::string> validate(const IntervalPartition& p) {
  if (p.ground_size() < 0) return "ground size must be nonnegative";
  if (p.ground_size() == 0) {
    if (!p.boundaries().empty()) return "partition of empty set has intervals";
    return std::nullopt;
  }
  int prev = 0;
  for (int b : p.boundaries()) {
    if (b <= prev) return "interval boundaries must be strictly increasing";
    prev = b;
  }
  if (prev != p.ground_size()) return "intervals do not cover [n]";
  return std::nullopt;
}

// ------------------------------------------------------------ Permutation

bool is_permutation_of_k(const Permutation& pi) {
  std::vector<char> seen(pi.size() + 1, 0);
  for (int a : pi) {
    if (a < 1 || a > static_cast<int>(pi.size()) || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

Permutation parse_permutation(const std::string& text) {
  Permutation pi;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + text + "'");
      pi.push_back(c - '0');
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad permutation '" + text + "'");
      pi.push_back(v);
    }
  }
  if (pi.empty() || !is_permutation_of_k(pi))
    throw std::invalid_argument("'" + text + "' is not a permutation of [k]");
  return pi;
}

std::string format_permutation(const Permutation& pi) {
  const bool compact = pi.size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(pi[i]);
  }
  return s;
}

}  // namespace patgrid
