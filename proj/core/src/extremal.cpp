#include "patgrid/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "kernels.hpp"
#include "patgrid/containment.hpp"
#include "patgrid/transforms.hpp"
#include "rds.hpp"

namespace patgrid {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("PATGRID_BUDGET_NODES")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = v;
  }
  return b;
}

namespace {

// Cells of [n]^d in lexicographic order, axis 1 most significant.
std::vector<int> all_cells(int n, int d) {
  std::vector<int> out;
  Point p(static_cast<std::size_t>(d), 1);
  if (n < 1) return out;
  while (true) {
    out.insert(out.end(), p.begin(), p.end());
    int t = d - 1;
    while (t >= 0 && p[t] == n) p[t--] = 1;
    if (t < 0) break;
    ++p[t];
  }
  return out;
}

class CellOracle {
 public:
  CellOracle(int n, int d) : d_(d), cells_(all_cells(n, d)) {
    host_.reserve(cells_.size());
  }

  std::size_t item_count() const { return cells_.size() / static_cast<std::size_t>(d_); }
  std::int64_t weight(std::size_t) const { return 1; }
  void add(std::size_t i) { host_.insert(host_.end(), cell(i), cell(i) + d_); }
  void remove_last() { host_.resize(host_.size() - static_cast<std::size_t>(d_)); }

  DMatrix to_matrix(int n, const std::vector<std::size_t>& items) const {
    std::vector<Point> edges;
    for (auto i : items) edges.emplace_back(cell(i), cell(i) + d_);
    return DMatrix::cube(d_, n, std::move(edges));
  }

 protected:
  const int* cell(std::size_t i) const { return cells_.data() + i * static_cast<std::size_t>(d_); }

  int d_;
  std::vector<int> cells_;
  std::vector<int> host_;
};

class MatrixAvoidOracle : public CellOracle {
 public:
  MatrixAvoidOracle(int n, const DMatrix& pattern)
      : CellOracle(n, pattern.dims()),
        problem_(detail::matrix_problem(pattern, std::vector<int>(
                                                     static_cast<std::size_t>(pattern.dims()), n))),
        search_(problem_),
        last_(pattern.edges().back()) {}

  // The new cell is lexicographically largest, so in any new copy it is the
  // image of the pattern's last edge.
  bool can_add(std::size_t i) {
    add(i);
    search_.set_host(host_);
    search_.reset();
    bool pinned = true;
    for (int t = 0; t < d_ && pinned; ++t) pinned = search_.pin(t, last_[t], cell(i)[t]);
    const bool creates_copy = pinned && search_.find();
    remove_last();
    return !creates_copy;
  }

 private:
  detail::MonotoneProblem problem_;
  detail::MonotoneSearch search_;
  Point last_;
};

class GridAvoidOracle : public CellOracle {
 public:
  GridAvoidOracle(int n, int k, int d) : CellOracle(n, d), n_(n), k_(k) {}

  bool can_add(std::size_t i) {
    add(i);
    const bool grid = detail::find_grid_boundaries(host_, d_, n_, k_).has_value();
    remove_last();
    return !grid;
  }

 private:
  int n_;
  int k_;
};

class GraphAvoidOracle {
 public:
  GraphAvoidOracle(int n, const OrderedGraph& pattern)
      : problem_(detail::graph_problem(pattern, n)), search_(problem_),
        last_(pattern.edges().back()) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs_.emplace_back(a, b);
    host_.reserve(pairs_.size() * 2);
  }

  std::size_t item_count() const { return pairs_.size(); }
  std::int64_t weight(std::size_t) const { return 1; }
  void add(std::size_t i) {
    host_.push_back(pairs_[i].first);
    host_.push_back(pairs_[i].second);
  }
  void remove_last() { host_.resize(host_.size() - 2); }

  bool can_add(std::size_t i) {
    add(i);
    search_.set_host(host_);
    search_.reset();
    const bool pinned =
        search_.pin(0, last_.first, pairs_[i].first) && search_.pin(0, last_.second, pairs_[i].second);
    const bool creates_copy = pinned && search_.find();
    remove_last();
    return !creates_copy;
  }

  OrderedGraph to_graph(int n, const std::vector<std::size_t>& items) const {
    std::vector<std::pair<int, int>> edges;
    for (auto i : items) edges.push_back(pairs_[i]);
    return OrderedGraph(n, std::move(edges));
  }

 private:
  detail::MonotoneProblem problem_;
  detail::MonotoneSearch search_;
  std::pair<int, int> last_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> host_;
};

class HypergraphAvoidOracle {
 public:
  HypergraphAvoidOracle(int n, const OrderedHypergraph& pattern, ExMode mode)
      : search_(pattern), mode_(mode) {
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      Edge e;
      for (int v = 1; v <= n; ++v)
        if (mask & (1U << (v - 1))) e.push_back(v);
      subsets_.push_back(std::move(e));
    }
  }

  std::size_t item_count() const { return subsets_.size(); }
  std::int64_t weight(std::size_t i) const {
    return mode_ == ExMode::edges ? 1 : static_cast<std::int64_t>(subsets_[i].size());
  }
  void add(std::size_t i) { host_.push_back(subsets_[i]); }
  void remove_last() { host_.pop_back(); }

  bool can_add(std::size_t i) {
    add(i);
    search_.set_host(host_);
    const bool creates_copy = search_.find_using(host_.size() - 1);
    remove_last();
    return !creates_copy;
  }

  OrderedHypergraph to_hypergraph(int n, const std::vector<std::size_t>& items) const {
    std::vector<Edge> edges;
    for (auto i : items) edges.push_back(subsets_[i]);
    return OrderedHypergraph(n, std::move(edges));
  }

 private:
  detail::HypergraphSearch search_;
  ExMode mode_;
  std::vector<Edge> subsets_;
  std::vector<Edge> host_;
};

template <class Oracle>
std::int64_t total_weight(const Oracle& oracle, const std::vector<std::size_t>& items) {
  std::int64_t w = 0;
  for (auto i : items) w += oracle.weight(i);
  return w;
}

// Runs the Russian-doll search; falls back to the incumbent when the budget
// runs out before the search found anything better.
template <class Oracle>
detail::RdsResult solve_with(Oracle& oracle, const Budget& budget,
                             std::vector<std::size_t> incumbent) {
  detail::RussianDoll<Oracle> rds(oracle, budget);
  auto result = rds.run();
  if (!result.exact) {
    const auto w = total_weight(oracle, incumbent);
    if (w > result.optimum) {
      result.optimum = w;
      result.witness = std::move(incumbent);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

// Cell indices of a matrix on [n]^d.
std::vector<std::size_t> cell_indices(const DMatrix& m, int n) {
  std::vector<std::size_t> out;
  for (const auto& p : m.edges()) {
    std::size_t idx = 0;
    for (int v : p) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
    out.push_back(idx);
  }
  return out;
}

}  // namespace

SearchReport<DMatrix> solve_f(int n, const DMatrix& pattern, const Budget& budget) {
  if (auto v = validate(pattern)) throw std::invalid_argument("invalid pattern: " + *v);
  if (pattern.empty()) throw std::invalid_argument("pattern must have at least one edge");
  SearchReport<DMatrix> report;
  if (n < 1) {
    report.witness = DMatrix::cube(pattern.dims(), 0);
    return report;
  }
  MatrixAvoidOracle oracle(n, pattern);
  auto incumbent = detail::greedy_solution(oracle);
  const auto hyperplane = lower_bound_construction(n, pattern.dims());
  if (hyperplane.size() > incumbent.size() && avoids_matrix(pattern, hyperplane))
    incumbent = cell_indices(hyperplane, n);
  auto r = solve_with(oracle, budget, std::move(incumbent));
  report.optimum = r.optimum;
  report.witness = oracle.to_matrix(n, r.witness);
  report.nodes_explored = r.nodes;
  report.exact = r.exact;
  return report;
}

SearchReport<DMatrix> solve_f(int n, const DPermutation& pattern, const Budget& budget) {
  return solve_f(n, pattern.matrix(), budget);
}

namespace {

// Image of a permutation pattern under an axis permutation followed by
// reversal of the axes flagged in `flip`.
std::vector<Point> transformed(const DPermutation& p, const std::vector<int>& axes,
                               unsigned flip) {
  const int k = p.k();
  std::vector<Point> out;
  for (const auto& e : p.edges()) {
    Point q(e.size());
    for (std::size_t t = 0; t < e.size(); ++t) {
      const int v = e[static_cast<std::size_t>(axes[t])];
      q[t] = (flip >> t) & 1U ? k + 1 - v : v;
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> canonical_form(const DPermutation& p) {
  const int d = p.dims();
  std::vector<int> axes(static_cast<std::size_t>(d));
  std::iota(axes.begin(), axes.end(), 0);
  std::vector<Point> best = p.edges();
  do {
    for (unsigned flip = 0; flip < (1U << d); ++flip) {
      auto c = transformed(p, axes, flip);
      if (c < best) best = std::move(c);
    }
  } while (std::next_permutation(axes.begin(), axes.end()));
  return best;
}

}  // namespace

std::vector<DPermutation> pattern_orbit_representatives(int k, int d) {
  std::set<std::vector<Point>> seen;
  std::vector<DPermutation> reps;
  for_each_d_permutation(k, d, [&](const DPermutation& p) {
    if (seen.insert(canonical_form(p)).second) reps.push_back(p);
    return true;
  });
  return reps;
}

WorstCaseReport solve_f_worst(int n, int k, int d, const SolveOptions& options) {
  if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
  const auto patterns = pattern_orbit_representatives(k, d);
  std::vector<SearchReport<DMatrix>> reports(patterns.size());

  const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
  if (workers == 1 || patterns.size() == 1) {
    for (std::size_t i = 0; i < patterns.size(); ++i)
      reports[i] = solve_f(n, patterns[i], options.budget);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, patterns.size()); ++w) {
      pool.emplace_back([&] {
        for (auto i = next.fetch_add(1); i < patterns.size(); i = next.fetch_add(1))
          reports[i] = solve_f(n, patterns[i], options.budget);
      });
    }
  }

  WorstCaseReport out;
  out.patterns_solved = patterns.size();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out.nodes_explored += reports[i].nodes_explored;
    out.exact = out.exact && reports[i].exact;
    if (!out.worst_pattern || reports[i].optimum > out.optimum) {
      out.optimum = reports[i].optimum;
      out.worst_pattern = patterns[i];
      out.witness = reports[i].witness;
    }
  }
  return out;
}

SearchReport<DMatrix> solve_g(int n, int k, int d, const Budget& budget) {
  if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
  SearchReport<DMatrix> report;
  if (n < 1) {
    report.witness = DMatrix::cube(d, 0);
    return report;
  }
  GridAvoidOracle oracle(n, k, d);
  auto incumbent = detail::greedy_solution(oracle);
  const auto hyperplane = lower_bound_construction(n, d);
  if (hyperplane.size() > incumbent.size() && !find_grid(hyperplane, k))
    incumbent = cell_indices(hyperplane, n);
  auto r = solve_with(oracle, budget, std::move(incumbent));
  report.optimum = r.optimum;
  report.witness = oracle.to_matrix(n, r.witness);
  report.nodes_explored = r.nodes;
  report.exact = r.exact;
  return report;
}

SearchReport<OrderedGraph> solve_gex(int n, const OrderedGraph& pattern, const Budget& budget) {
  if (auto v = validate(pattern)) throw std::invalid_argument("invalid pattern: " + *v);
  if (pattern.size() == 0) throw std::invalid_argument("pattern must have at least one edge");
  SearchReport<OrderedGraph> report;
  if (n < 1) return report;
  GraphAvoidOracle oracle(n, pattern);
  auto r = solve_with(oracle, budget, detail::greedy_solution(oracle));
  report.optimum = r.optimum;
  report.witness = oracle.to_graph(n, r.witness);
  report.nodes_explored = r.nodes;
  report.exact = r.exact;
  return report;
}

SearchReport<OrderedHypergraph> solve_ex(int n, const OrderedHypergraph& pattern, ExMode mode,
                                         const ExOptions& options) {
  if (auto v = validate(pattern)) throw std::invalid_argument("invalid pattern: " + *v);
  if (pattern.size() == 0) throw std::invalid_argument("pattern must have at least one edge");
  if (n > options.max_n)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the hypergraph limit " +
                        std::to_string(options.max_n));
  if (n > 20) throw ResourceError("n > 20 is not representable");
  SearchReport<OrderedHypergraph> report;
  if (n < 1) return report;
  HypergraphAvoidOracle oracle(n, pattern, mode);
  auto r = solve_with(oracle, options.budget, detail::greedy_solution(oracle));
  report.optimum = r.optimum;
  report.witness = oracle.to_hypergraph(n, r.witness);
  report.nodes_explored = r.nodes;
  report.exact = r.exact;
  return report;
}

BigInt lemma3_rhs(int m, int n0, int k, int d, const BigInt& f_n0_d, const BigInt& f_n0_dm1) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  const auto ud = static_cast<unsigned>(d);
  return power(BigInt(k - 1), ud) * f_n0_d +
         BigInt(d) * n0 * power(BigInt(m), ud) * binomial(m, k) * f_n0_dm1;
}

Lemma3Report verify_lemma3(int m, int n0, int k, int d, const SolveOptions& options) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (m < 1 || n0 < 1 || k < 1) throw std::invalid_argument("m, n0 and k must be positive");
  Lemma3Report r;
  r.m = m;
  r.n0 = n0;
  r.k = k;
  r.d = d;
  const auto lhs = solve_f_worst(m * n0, k, d, options);
  const auto fd = solve_f_worst(n0, k, d, options);
  const auto fd1 = solve_f_worst(n0, k, d - 1, options);
  r.lhs = lhs.optimum;
  r.f_n0_d = fd.optimum;
  r.f_n0_dm1 = fd1.optimum;
  r.rhs = lemma3_rhs(m, n0, k, d, r.f_n0_d, r.f_n0_dm1);
  r.exact = lhs.exact && fd.exact && fd1.exact;
  r.holds = r.exact && r.lhs <= r.rhs;
  return r;
}

Lemma4Constant lemma4_constant(int k, int d) {
  if (k < 1 || d < 2) throw std::invalid_argument("need k >= 1 and d >= 2");
  // Smallest m with m^(d-1) >= k^d, by bisection on exact integers.
  const BigInt target = power(BigInt(k), static_cast<unsigned>(d));
  BigInt lo = 1, hi = target;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (power(mid, static_cast<unsigned>(d - 1)) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Lemma4Constant out;
  out.m = lo;
  const auto m = lo.convert_to<long long>();
  out.c = target * power(BigInt(d) * m * binomial(m + 1, k), static_cast<unsigned>(d - 1));
  return out;
}

Eq2Report verify_eq2(int n, const Permutation& pi, const ExOptions& options) {
  const int k = static_cast<int>(pi.size());
  if (k < 2) throw std::invalid_argument("the inequality needs k >= 2");
  const auto pattern = permutation_graph(pi).as_hypergraph();
  Eq2Report r;
  r.n = n;
  r.pi = pi;
  const auto e = solve_ex(n, pattern, ExMode::edges, options);
  const auto w = solve_ex(n, pattern, ExMode::weight, options);
  r.ex_e = e.optimum;
  r.ex_i = w.optimum;
  r.factor = BigInt(4 * k - 1) * (k - 1);
  r.exact = e.exact && w.exact;
  r.holds = r.exact && BigInt(r.ex_i) <= r.factor * r.ex_e;
  return r;
}

DPermutation grid_permutation(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("k and d must be positive");
  int slab = 1;  // k^(d-1)
  for (int t = 1; t < d; ++t) slab *= k;
  const int side = slab * k;
  std::vector<Point> edges;
  Point block(static_cast<std::size_t>(d), 1);
  while (true) {
    Point e(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
      int rank = 0;
      for (int s = 0; s < d; ++s)
        if (s != t) rank = rank * k + (block[s] - 1);
      e[t] = (block[t] - 1) * slab + 1 + rank;
    }
    edges.push_back(std::move(e));
    int t = d - 1;
    while (t >= 0 && block[t] == k) block[t--] = 1;
    if (t < 0) break;
    ++block[t];
  }
  return DPermutation(DMatrix::cube(d, side, std::move(edges)));
}

}  // namespace patgrid
