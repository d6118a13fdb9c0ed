#pragma once

// Text format, one structure per file (or per line in streaming mode):
//
//   dmatrix d=2 sides=3,3 edges=(1,1);(2,3)
//   hypergraph n=3 edges={1,3};{1,3};{2}
//   graph n=4 edges={1,3};{2,4}
//
// Whitespace between tokens is ignored.  Output is canonical: edges sorted,
// single spaces between fields.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patgrid/core.hpp"

namespace patgrid {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using Structure = std::variant<DMatrix, OrderedGraph, OrderedHypergraph>;

std::string serialize(const DMatrix& m);
std::string serialize(const DPermutation& p);
std::string serialize(const OrderedGraph& g);
std::string serialize(const OrderedHypergraph& h);
std::string serialize(const Structure& s);

/// Parses one structure.  Edge order is normalized; an invariant violation
/// (duplicate matrix edge, out-of-range coordinate, ...) raises ParseError.
Structure deserialize(std::string_view text);

DMatrix deserialize_dmatrix(std::string_view text);
OrderedGraph deserialize_graph(std::string_view text);
OrderedHypergraph deserialize_hypergraph(std::string_view text);

/// Splits streaming input into one structure per non-blank line.
std::vector<Structure> deserialize_lines(std::string_view text);

}  // namespace patgrid
