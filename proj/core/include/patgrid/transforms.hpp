#pragma once

// Structural operations: permutation graphs, remainders, contraction,
// blow-ups, the hyperplane lower-bound matrix and partition path graphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "patgrid/containment.hpp"
#include "patgrid/core.hpp"

namespace patgrid {

/// P(pi) = ([2k], {{i, k + a_i}}).
OrderedGraph permutation_graph(const Permutation& pi);

/// Deletes axis t (1-based) and collapses duplicate projections.
DMatrix t_remainder(const DMatrix& m, int axis);

/// Quotient of an equal-sided matrix by one interval partition shared by all
/// axes: a cell is present iff its block holds an edge.
DMatrix contract(const DMatrix& m, const IntervalPartition& parts);

/// The canonical blow-up P(pi'): each edge of P(pi) becomes a bundle of
/// b = k(m-1)+1 parallel edges with order-preserving wiring.
struct BlowUp {
  OrderedGraph graph;
  Permutation permutation;            // pi' on [k*b]
  std::vector<int> bundle_of_edge;    // bundle (1-based) of each edge of graph
  int bundle_size = 0;
};

BlowUp blow_up(const Permutation& pi, int m);

/// Every edge has first coordinate 1; n^(d-1) edges.
DMatrix lower_bound_construction(int n, int dims);

/// A set partition of [n] given by its blocks.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
};

/// G(H): edges join consecutive elements of each block.  Throws
/// std::invalid_argument on overlapping or non-covering blocks.
OrderedGraph partition_to_path_graph(const SetPartition& partition);

/// Relabels the vertices spanned by the edges to 1..r in order; two edge
/// sets are order-isomorphic iff their compressions are equal.
OrderedGraph compress(const std::vector<std::pair<int, int>>& edges);

/// Searches for an ordered copy of pattern in host whose edges carry
/// pairwise distinct colors (colors indexed like host.edges()).
std::optional<GraphEmbedding> find_rainbow_copy(const OrderedGraph& pattern,
                                                const OrderedGraph& host,
                                                const std::vector<int>& edge_colors);

}  // namespace patgrid
