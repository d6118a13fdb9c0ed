#pragma once

// Ordered containment for matrices, graphs and hypergraphs.
//
// Every contains_* function returns the lexicographically least embedding
// (injection value lists concatenated in order) or nothing when the host
// avoids the pattern.  The avoids_* predicates only decide existence and
// skip the witness refinement.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "patgrid/core.hpp"

namespace patgrid {

/// d increasing injections; maps[t][x - 1] = f_{t+1}(x).
struct MatrixEmbedding {
  std::vector<std::vector<int>> maps;
  friend bool operator==(const MatrixEmbedding&, const MatrixEmbedding&) = default;
};

/// Increasing vertex injection; vertex_map[v - 1] = f(v).
struct GraphEmbedding {
  std::vector<int> vertex_map;
  friend bool operator==(const GraphEmbedding&, const GraphEmbedding&) = default;
};

/// f on V(H') (pattern_vertices[i] -> host_vertices[i]) and an injection g
/// on edge positions of the canonical edge lists (0-based).
struct HypergraphEmbedding {
  std::vector<int> pattern_vertices;
  std::vector<int> host_vertices;
  std::vector<std::size_t> edge_map;
  friend bool operator==(const HypergraphEmbedding&, const HypergraphEmbedding&) = default;
};

std::string format_embedding(const MatrixEmbedding& e);
std::string format_embedding(const GraphEmbedding& e);
std::string format_embedding(const HypergraphEmbedding& e);

/// Throws std::invalid_argument on dimension mismatch.
std::optional<MatrixEmbedding> contains_matrix(const DMatrix& pattern, const DMatrix& host);
bool avoids_matrix(const DMatrix& pattern, const DMatrix& host);

std::optional<GraphEmbedding> contains_graph(const OrderedGraph& pattern,
                                             const OrderedGraph& host);
bool avoids_graph(const OrderedGraph& pattern, const OrderedGraph& host);

std::optional<HypergraphEmbedding> contains_hypergraph(const OrderedHypergraph& pattern,
                                                       const OrderedHypergraph& host);
bool avoids_hypergraph(const OrderedHypergraph& pattern, const OrderedHypergraph& host);

/// Applies an embedding: the image of every pattern edge.  Used to check
/// witnesses independently of the search.
std::vector<Point> image_of(const DMatrix& pattern, const MatrixEmbedding& e);
bool is_embedding(const DMatrix& pattern, const DMatrix& host, const MatrixEmbedding& e);
bool is_embedding(const OrderedGraph& pattern, const OrderedGraph& host, const GraphEmbedding& e);
bool is_embedding(const OrderedHypergraph& pattern, const OrderedHypergraph& host,
                  const HypergraphEmbedding& e);

/// Looks for a k-grid inside host: one partition of [n] into k intervals per
/// axis such that every one of the k^d cells holds a host edge.  Choosing one
/// edge per cell then yields a sub-matrix that is a k-grid, so a result
/// exists exactly when some k-grid is contained in host.  Among all answers
/// the one with the lexicographically least concatenated boundary lists is
/// returned.  Requires equal sides.
std::optional<std::vector<IntervalPartition>> find_grid(const DMatrix& host, int k);

}  // namespace patgrid
