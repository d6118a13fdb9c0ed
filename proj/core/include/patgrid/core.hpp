#pragma once

// Structure families shared by every other module: d-dimensional 0-1
// matrices, d-dimensional permutations, ordered graphs and ordered
// hypergraphs.  Coordinates and vertices are 1-based throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patgrid {

using Point = std::vector<int>;

/// Raised when a value handed to a constructor or algorithm breaks an
/// invariant that the callee cannot report as a return value.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration or search would exceed a caller supplied cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A d-dimensional 0-1 matrix stored as its set of 1-entries ("edges").
///
/// The constructor only canonicalizes (sorts) the edge list; bounds and
/// duplicates are reported by validate() so that malformed candidates can be
/// inspected rather than rejected outright.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(std::vector<int> sides, std::vector<Point> edges);

  /// All sides equal to n.
  static DMatrix cube(int dims, int n, std::vector<Point> edges = {});

  int dims() const { return static_cast<int>(sides_.size()); }
  const std::vector<int>& sides() const { return sides_; }
  int side(int axis) const { return sides_.at(static_cast<std::size_t>(axis - 1)); }
  const std::vector<Point>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool has_edge(const Point& p) const;
  /// True when every side has the same length.
  bool is_cube() const;

  friend bool operator==(const DMatrix&, const DMatrix&) = default;

 private:
  std::vector<int> sides_;
  std::vector<Point> edges_;
};

std::optional<std::string> validate(const DMatrix& m);

/// Checks the one-edge-per-hyperplane axiom (plus validate()).
std::optional<std::string> validate_permutation(const DMatrix& m);

/// A d-dimensional permutation of [k].
class DPermutation {
 public:
  /// Throws InvariantError unless validate_permutation(m) succeeds.
  explicit DPermutation(DMatrix m);

  /// Builds from d rows, each a permutation of 1..k.  Column x gives the
  /// coordinates of one edge.
  static DPermutation from_rows(const std::vector<std::vector<int>>& rows);

  /// d-dimensional identity of [k]: edges (x, x, ..., x).
  static DPermutation identity(int k, int dims);

  int k() const { return k_; }
  int dims() const { return matrix_.dims(); }
  const DMatrix& matrix() const { return matrix_; }
  const std::vector<Point>& edges() const { return matrix_.edges(); }

  friend bool operator==(const DPermutation&, const DPermutation&) = default;

 private:
  int k_ = 0;
  DMatrix matrix_;
};

/// Calls visit(P) for each d-dimensional permutation of [k] in
/// lexicographic order of edge lists; stops early when visit returns false.
void for_each_d_permutation(int k, int dims,
                            const std::function<bool(const DPermutation&)>& visit);

/// Number of d-dimensional permutations of [k], (k!)^(d-1), saturating at
/// UINT64_MAX.
std::uint64_t d_permutation_count(int k, int dims);

/// All d-dimensional permutations of [k]; throws ResourceError when their
/// number exceeds cap.
std::vector<DPermutation> enumerate_d_permutations(int k, int dims,
                                                   std::uint64_t cap = 1'000'000);

using Edge = std::vector<int>;

/// Hypergraph on the ordered vertex set [n] whose edges form a multiset of
/// nonempty subsets.  Edges are stored as sorted vertex lists; the edge list
/// is kept sorted so that equality is multiset equality.
class OrderedHypergraph {
 public:
  OrderedHypergraph() = default;
  OrderedHypergraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// v(H): number of vertices covered by edges.
  int order() const;
  /// e(H): number of edges counted with multiplicity.
  std::size_t size() const { return edges_.size(); }
  /// i(H): number of vertex-edge incidences.
  std::size_t weight() const;
  bool is_simple() const;
  /// Every vertex of [n] lies in some edge.
  bool is_covering() const;
  std::vector<int> vertex_set() const;

  friend bool operator==(const OrderedHypergraph&, const OrderedHypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

std::optional<std::string> validate(const OrderedHypergraph& h);

/// Simple graph on [n]; isolated vertices are allowed.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  /// Endpoints of each pair are normalized to (min, max) and pairs sorted.
  OrderedGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool has_edge(int a, int b) const;

  OrderedHypergraph as_hypergraph() const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

std::optional<std::string> validate(const OrderedGraph& g);

/// Partition of [n] into consecutive intervals I_1 < ... < I_r, stored by
/// right endpoints.
class IntervalPartition {
 public:
  IntervalPartition() = default;
  IntervalPartition(int n, std::vector<int> boundaries);

  static IntervalPartition singletons(int n);
  static IntervalPartition uniform(int n, int width);

  int ground_size() const { return n_; }
  const std::vector<int>& boundaries() const { return bounds_; }
  int count() const { return static_cast<int>(bounds_.size()); }
  int lo(int j) const;
  int hi(int j) const;
  /// Index (1-based) of the interval containing x.
  int block_of(int x) const;

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  int n_ = 0;
  std::vector<int> bounds_;
};

std::optional<std::string> validate(const IntervalPartition& p);

/// Result of an exact extremal search.
template <class Witness>
struct SearchReport {
  std::int64_t optimum = 0;
  Witness witness{};
  std::uint64_t nodes_explored = 0;
  bool exact = true;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// A permutation of [k] in one-line notation, a_1 ... a_k.
using Permutation = std::vector<int>;

bool is_permutation_of_k(const Permutation& pi);

/// Parses "231" (single digits) or "2,3,1".
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& pi);

}  // namespace patgrid
