#pragma once

// Internal search kernels shared by containment, transforms, extremal and
// enumeration.  Not installed.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "monotone_search.hpp"
#include "patgrid/core.hpp"

namespace patgrid::detail {

MonotoneProblem matrix_problem(const DMatrix& pattern, const std::vector<int>& host_sides);
MonotoneProblem graph_problem(const OrderedGraph& pattern, int host_vertices);

std::vector<int> flatten(const DMatrix& m);
std::vector<int> flatten(const OrderedGraph& g);

/// Hypergraph containment over vertex ranks.  Pattern edges are matched in
/// order of decreasing size (then lexicographically).
class HypergraphSearch {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  explicit HypergraphSearch(const OrderedHypergraph& pattern);

  /// Host edges may repeat and need not be sorted; each edge must be sorted.
  void set_host(std::span<const Edge> host);

  void clear_pins();
  bool pin_vertex(int pattern_rank, int host_rank);
  bool pin_edge(std::size_t pattern_edge, std::size_t host_edge);

  bool find();
  /// Is there an embedding whose edge injection hits host_edge?  Clears pins.
  bool find_using(std::size_t host_edge);

  int pattern_order() const { return static_cast<int>(pattern_vertices_.size()); }
  std::size_t pattern_size() const { return pattern_edges_.size(); }
  std::size_t host_size() const { return host_edges_.size(); }
  const std::vector<int>& pattern_vertices() const { return pattern_vertices_; }
  const std::vector<int>& host_vertices() const { return host_vertices_; }

  /// Host ranks for pattern ranks 1..p, completed greedily.
  std::vector<int> vertex_images() const;
  std::vector<std::size_t> edge_images() const { return edge_image_; }

 private:
  bool prepare();
  bool dfs(std::size_t i);
  bool match(const std::vector<int>& pe, const std::vector<int>& he, std::size_t idx,
             std::size_t i);
  bool feasible(int x, int y) const;

  std::vector<int> pattern_vertices_;
  std::vector<std::vector<int>> pattern_edges_;  // ranks
  std::vector<std::size_t> order_;
  std::vector<int> host_vertices_;
  std::vector<std::vector<int>> host_edges_;  // ranks

  std::vector<std::pair<int, int>> vertex_pins_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_pins_;

  std::vector<int> image_;
  std::vector<std::size_t> edge_image_;
  std::vector<char> used_;
  std::vector<char> pinned_;
};

/// Grid search over flat sorted d-tuples on [n]^d.  Returns the boundary
/// lists (right endpoints, last = n) per axis.
std::optional<std::vector<std::vector<int>>> find_grid_boundaries(std::span<const int> host,
                                                                  int dims, int n, int k);

}  // namespace patgrid::detail
