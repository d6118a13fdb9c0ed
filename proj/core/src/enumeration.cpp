#include "patgrid/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kernels.hpp"
#include "patgrid/transforms.hpp"

namespace patgrid {

namespace {

constexpr int kPermutationCap = 10;
constexpr int kWordCap = 6;
constexpr int kVertexCap = 4;
constexpr int kWeightCap = 7;
constexpr int kPartitionCap = 12;

void check_cap(int n, int default_cap, const CountOptions& options, const char* what) {
  const int cap = options.max_n > 0 ? options.max_n : default_cap;
  if (n > cap)
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
}

// Sums fn(chunk) over chunks using up to `workers` threads.  Addition is
// order independent, so the total does not depend on scheduling.
template <class Fn>
std::uint64_t parallel_sum(std::size_t chunks, int workers, Fn&& fn) {
  const auto w = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), chunks);
  if (w <= 1) {
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < chunks; ++c) total += fn(c);
    return total;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < w; ++i) {
      pool.emplace_back([&] {
        std::uint64_t local = 0;
        for (auto c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) local += fn(c);
        total += local;
      });
    }
  }
  return total.load();
}

// Decides containment of a fixed graph pattern in hosts on a fixed vertex
// count, reusing one search object.
class GraphPatternChecker {
 public:
  GraphPatternChecker(const OrderedGraph& pattern, int host_vertices)
      : problem_(detail::graph_problem(pattern, host_vertices)), search_(problem_) {}

  /// host: flat lexicographically sorted pairs.
  bool contains(const std::vector<int>& host) {
    search_.set_host(host);
    return search_.find();
  }

 private:
  detail::MonotoneProblem problem_;
  detail::MonotoneSearch search_;
};

}  // namespace

bool contains_pattern(const std::vector<int>& seq, const Permutation& pi) {
  const auto k = pi.size();
  if (k == 0) return true;
  if (k > seq.size()) return false;
  // For pattern position j, the earlier positions holding the nearest
  // smaller and nearest larger pattern values bound the admissible letters.
  std::vector<int> below(k, -1), above(k, -1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (pi[i] < pi[j] && (below[j] < 0 || pi[i] > pi[below[j]])) below[j] = static_cast<int>(i);
      if (pi[i] > pi[j] && (above[j] < 0 || pi[i] < pi[above[j]])) above[j] = static_cast<int>(i);
    }
  }
  std::vector<int> value(k);
  auto dfs = [&](auto&& self, std::size_t j, std::size_t start) -> bool {
    if (j == k) return true;
    for (std::size_t i = start; i + (k - j) <= seq.size(); ++i) {
      const int v = seq[i];
      if (below[j] >= 0 && v <= value[below[j]]) continue;
      if (above[j] >= 0 && v >= value[above[j]]) continue;
      value[j] = v;
      if (self(self, j + 1, i + 1)) return true;
    }
    return false;
  };
  return dfs(dfs, 0, 0);
}

BigInt count_avoiding_permutations(int n, const Permutation& pi, CountMethod method,
                                   const CountOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!is_permutation_of_k(pi) || pi.empty()) throw std::invalid_argument("not a permutation");
  check_cap(n, kPermutationCap, options, "permutations");
  const auto pattern = permutation_graph(pi);
  const auto chunks = static_cast<std::size_t>(n);
  return parallel_sum(chunks, options.workers, [&](std::size_t c) {
    GraphPatternChecker checker(pattern, 2 * n);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::rotate(sigma.begin(), sigma.begin() + static_cast<long>(c), sigma.begin() + static_cast<long>(c) + 1);
    std::vector<int> host(2 * static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    do {
      bool contained = false;
      if (method == CountMethod::direct) {
        contained = contains_pattern(sigma, pi);
      } else {
        for (int i = 0; i < n; ++i) {
          host[2 * i] = i + 1;
          host[2 * i + 1] = n + sigma[i];
        }
        contained = checker.contains(host);
      }
      if (!contained) ++count;
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    return count;
  });
}

OrderedGraph word_graph(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i + 1, n + word[i]);
  return OrderedGraph(2 * n, std::move(edges));
}

BigInt count_avoiding_words(int n, const Permutation& pi, CountMethod method,
                            const CountOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!is_permutation_of_k(pi) || pi.empty()) throw std::invalid_argument("not a permutation");
  check_cap(n, kWordCap, options, "words");
  const auto pattern = permutation_graph(pi);
  return parallel_sum(static_cast<std::size_t>(n), options.workers, [&](std::size_t c) {
    GraphPatternChecker checker(pattern, 2 * n);
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    word[0] = static_cast<int>(c) + 1;
    std::vector<int> host(2 * static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    while (true) {
      bool contained = false;
      if (method == CountMethod::direct) {
        contained = contains_pattern(word, pi);
      } else {
        for (int i = 0; i < n; ++i) {
          host[2 * i] = i + 1;
          host[2 * i + 1] = n + word[i];
        }
        contained = checker.contains(host);
      }
      if (!contained) ++count;
      int i = n - 1;
      while (i >= 1 && word[i] == n) word[i--] = 1;
      if (i < 1) break;
      ++word[i];
    }
    return count;
  });
}

// --------------------------------------------------------------- hypergraphs

namespace {

std::vector<Edge> subsets_by_mask(int n) {
  std::vector<Edge> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    Edge e;
    for (int v = 1; v <= n; ++v)
      if (mask & (1U << (v - 1))) e.push_back(v);
    out.push_back(std::move(e));
  }
  return out;
}

unsigned mask_of(const Edge& e) {
  unsigned m = 0;
  for (int v : e) m |= 1U << (v - 1);
  return m;
}

// Simple hypergraphs on [n] avoiding the pattern, explored as a tree of
// include/exclude decisions; avoidance is hereditary so excluded branches
// are never revisited.
class VertexFamilyCounter {
 public:
  VertexFamilyCounter(int n, const OrderedHypergraph& pattern, bool maximal_only)
      : n_(n), maximal_only_(maximal_only), subsets_(subsets_by_mask(n)), search_(pattern) {
    for (const auto& e : subsets_) masks_.push_back(mask_of(e));
  }

  std::size_t prefix_bits() const { return std::min<std::size_t>(4, subsets_.size()); }

  // Fixes the decisions on the first prefix_bits() items from `chunk`.
  std::uint64_t run_chunk(std::size_t chunk) {
    host_.clear();
    in_.assign(subsets_.size(), 0);
    count_ = 0;
    const auto bits = prefix_bits();
    for (std::size_t i = 0; i < bits; ++i) {
      if ((chunk >> i) & 1U) {
        if (!try_add(i)) return 0;
      }
    }
    dfs(bits, covered());
    return count_;
  }

 private:
  unsigned covered() const {
    unsigned m = 0;
    for (std::size_t i = 0; i < subsets_.size(); ++i)
      if (in_[i]) m |= masks_[i];
    return m;
  }

  bool try_add(std::size_t i) {
    host_.push_back(subsets_[i]);
    search_.set_host(host_);
    if (search_.find_using(host_.size() - 1)) {
      host_.pop_back();
      return false;
    }
    in_[i] = 1;
    return true;
  }

  void drop(std::size_t i) {
    host_.pop_back();
    in_[i] = 0;
  }

  void dfs(std::size_t i, unsigned cover) {
    if (i == subsets_.size()) {
      if (cover != (1U << n_) - 1U) return;
      if (maximal_only_ && !is_maximal()) return;
      ++count_;
      return;
    }
    if (try_add(i)) {
      dfs(i + 1, cover | masks_[i]);
      drop(i);
    }
    dfs(i + 1, cover);
  }

  bool is_maximal() {
    for (std::size_t j = 0; j < subsets_.size(); ++j) {
      if (in_[j]) continue;
      host_.push_back(subsets_[j]);
      search_.set_host(host_);
      const bool blocked = search_.find_using(host_.size() - 1);
      host_.pop_back();
      if (!blocked) return false;
    }
    return true;
  }

  int n_;
  bool maximal_only_;
  std::vector<Edge> subsets_;
  std::vector<unsigned> masks_;
  detail::HypergraphSearch search_;
  std::vector<Edge> host_;
  std::vector<char> in_;
  std::uint64_t count_ = 0;
};

// Covering multisets of nonempty subsets of [v] with total size w, as
// nondecreasing index sequences over subsets ordered by (size, lex).
class WeightFamilyCounter {
 public:
  WeightFamilyCounter(int v, int weight, const OrderedHypergraph& pattern, bool simple_only)
      : v_(v), weight_(weight), simple_only_(simple_only), search_(pattern) {
    subsets_ = subsets_by_mask(v);
    std::stable_sort(subsets_.begin(), subsets_.end(), [](const Edge& a, const Edge& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& e : subsets_) masks_.push_back(mask_of(e));
  }

  std::size_t first_edge_count() const { return subsets_.size(); }

  std::uint64_t run_chunk(std::size_t first) {
    host_.clear();
    count_ = 0;
    if (static_cast<int>(subsets_[first].size()) > weight_) return 0;
    if (!push(first)) return 0;
    dfs(first, weight_ - static_cast<int>(subsets_[first].size()), masks_[first]);
    host_.pop_back();
    return count_;
  }

 private:
  bool push(std::size_t i) {
    host_.push_back(subsets_[i]);
    search_.set_host(host_);
    if (search_.find_using(host_.size() - 1)) {
      host_.pop_back();
      return false;
    }
    return true;
  }

  void dfs(std::size_t last, int remaining, unsigned cover) {
    if (remaining == 0) {
      if (cover == (1U << v_) - 1U) ++count_;
      return;
    }
    for (std::size_t i = simple_only_ ? last + 1 : last; i < subsets_.size(); ++i) {
      const int s = static_cast<int>(subsets_[i].size());
      if (s > remaining) break;
      if (!push(i)) continue;
      dfs(i, remaining - s, cover | masks_[i]);
      host_.pop_back();
    }
  }

  int v_;
  int weight_;
  bool simple_only_;
  std::vector<Edge> subsets_;
  std::vector<unsigned> masks_;
  detail::HypergraphSearch search_;
  std::vector<Edge> host_;
  std::uint64_t count_ = 0;
};

}  // namespace

BigInt count_hypergraphs(const CountQuery& query, const CountOptions& options) {
  if (query.n < 1) throw std::invalid_argument("n must be positive");
  if (auto v = validate(query.pattern)) throw std::invalid_argument("invalid pattern: " + *v);
  const int n = query.n;
  switch (query.family) {
    case HypergraphFamily::c1:
    case HypergraphFamily::c2: {
      check_cap(n, kVertexCap, options, "hypergraphs by vertex count");
      const bool maximal = query.family == HypergraphFamily::c2;
      const auto bits = VertexFamilyCounter(n, query.pattern, maximal).prefix_bits();
      return parallel_sum(std::size_t{1} << bits, options.workers, [&](std::size_t c) {
        VertexFamilyCounter counter(n, query.pattern, maximal);
        return counter.run_chunk(c);
      });
    }
    case HypergraphFamily::c5:
    case HypergraphFamily::c6: {
      check_cap(n, kWeightCap, options, "hypergraphs by weight");
      const bool simple = query.family == HypergraphFamily::c5;
      // Chunk over (vertex count v, first edge).
      std::vector<std::pair<int, std::size_t>> chunks;
      for (int v = 1; v <= n; ++v) {
        const auto edges = WeightFamilyCounter(v, n, query.pattern, simple).first_edge_count();
        for (std::size_t f = 0; f < edges; ++f) chunks.emplace_back(v, f);
      }
      return parallel_sum(chunks.size(), options.workers, [&](std::size_t c) {
        WeightFamilyCounter counter(chunks[c].first, n, query.pattern, simple);
        return counter.run_chunk(chunks[c].second);
      });
    }
  }
  throw std::logic_error("unhandled family");
}

// ---------------------------------------------------------------- partitions

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      visit(rgs);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

BigInt count_partitions(int n, int k, PartitionMode mode, const CountOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  check_cap(n, kPartitionCap, options, "partitions");
  Permutation pi(static_cast<std::size_t>(k));
  std::iota(pi.begin(), pi.end(), 1);
  if (mode == PartitionMode::nonnesting) std::reverse(pi.begin(), pi.end());
  const auto pattern = permutation_graph(pi);

  // Chunks are restricted-growth prefixes of length `depth`.
  const int depth = std::min(n, 4);
  std::vector<std::vector<int>> prefixes;
  for_each_set_partition(depth, [&](const std::vector<int>& p) { prefixes.push_back(p); });

  return parallel_sum(prefixes.size(), options.workers, [&](std::size_t c) {
    GraphPatternChecker checker(pattern, n);
    std::vector<int> rgs = prefixes[c];
    rgs.resize(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> host;
    std::vector<int> last(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    auto leaf = [&]() {
      edges.clear();
      std::fill(last.begin(), last.end(), 0);
      for (int i = 0; i < n; ++i) {
        if (last[rgs[i]] != 0) edges.emplace_back(last[rgs[i]], i + 1);
        last[rgs[i]] = i + 1;
      }
      std::sort(edges.begin(), edges.end());
      host.clear();
      for (auto [a, b] : edges) {
        host.push_back(a);
        host.push_back(b);
      }
      if (!checker.contains(host)) ++count;
    };
    const int start_blocks = *std::max_element(prefixes[c].begin(), prefixes[c].end()) + 1;
    auto rec = [&](auto&& self, int i, int blocks) -> void {
      if (i == n) {
        leaf();
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(blocks, b + 1));
      }
    };
    rec(rec, depth, start_blocks);
    return count;
  });
}

// -------------------------------------------------------------------- growth

namespace {

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::permutations, "permutations"},
    {Family::words, "words"},
    {Family::partitions_noncrossing, "partitions-noncrossing"},
    {Family::partitions_nonnesting, "partitions-nonnesting"},
    {Family::hypergraphs_c1, "hypergraphs-C1"},
    {Family::hypergraphs_c2, "hypergraphs-C2"},
    {Family::hypergraphs_c5, "hypergraphs-C5"},
    {Family::hypergraphs_c6, "hypergraphs-C6"},
};

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
  for (auto [f, s] : kFamilyNames)
    if (name == s) return f;
  return std::nullopt;
}

std::string family_name(Family f) {
  for (auto [g, s] : kFamilyNames)
    if (f == g) return s;
  return "?";
}

BigInt klazar_weight_bound(int k, int weight) {
  const auto exponent = (power(BigInt(3), static_cast<unsigned>(2 * k)) + 2 * k) * weight;
  return power(BigInt(9), exponent.convert_to<unsigned>());
}

GrowthReport growth_report(Family family, const Permutation& pi, int k, int n_max,
                           const CountOptions& options) {
  GrowthReport report;
  report.family = family;
  auto hyper = [&](HypergraphFamily hf, int n) {
    CountQuery q;
    q.family = hf;
    q.n = n;
    q.pattern = permutation_graph(pi).as_hypergraph();
    return count_hypergraphs(q, options);
  };
  for (int n = 1; n <= n_max; ++n) {
    BigInt count;
    switch (family) {
      case Family::permutations: count = count_avoiding_permutations(n, pi, CountMethod::graph_encoding, options); break;
      case Family::words: count = count_avoiding_words(n, pi, CountMethod::graph_encoding, options); break;
      case Family::partitions_noncrossing: count = count_partitions(n, k, PartitionMode::noncrossing, options); break;
      case Family::partitions_nonnesting: count = count_partitions(n, k, PartitionMode::nonnesting, options); break;
      case Family::hypergraphs_c1: count = hyper(HypergraphFamily::c1, n); break;
      case Family::hypergraphs_c2: count = hyper(HypergraphFamily::c2, n); break;
      case Family::hypergraphs_c5: count = hyper(HypergraphFamily::c5, n); break;
      case Family::hypergraphs_c6: count = hyper(HypergraphFamily::c6, n); break;
    }
    const double c = count.convert_to<double>();
    report.rows.push_back({n, count, c > 0 ? std::pow(c, 1.0 / n) : 0.0});
  }
  switch (family) {
    case Family::hypergraphs_c1:
      report.footnotes.push_back("hypergraphs cover [n] (no isolated vertices)");
      break;
    case Family::hypergraphs_c2:
      report.footnotes.push_back("hypergraphs cover [n] (no isolated vertices)");
      report.footnotes.push_back(
          "maximal = no single new edge over [n] can be added while still avoiding");
      break;
    case Family::hypergraphs_c5:
    case Family::hypergraphs_c6:
      report.footnotes.push_back("n is the weight i(H); vertex set normalized to [v(H)]");
      report.footnotes.push_back("weight-n avoiders of P(pi), |pi| = " +
                                 std::to_string(pi.size()) +
                                 ", number at most 9^((3^(2k)+2k) n); see klazar_weight_bound");
      break;
    default:
      break;
  }
  return report;
}

std::string to_csv(const GrowthReport& report) {
  std::string out = "n,count,root\n";
  for (const auto& row : report.rows) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, row.root, std::chars_format::fixed, 6);
    out += std::to_string(row.n) + "," + row.count.str() + "," + std::string(buf, ptr) + "\n";
  }
  return out;
}

}  // namespace patgrid
