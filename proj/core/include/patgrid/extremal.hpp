#pragma once

// Exact extremal functions at desk scale:
//
//   f(n, P, d)   largest n^d matrix avoiding P
//   f(n, k, d)   max of f(n, P, d) over d-dimensional permutations P of [k]
//   g(n, k, d)   largest n^d matrix containing no k-grid
//   gex(n, G)    largest graph on [n] avoiding the ordered graph G
//   ex_e, ex_i   largest simple hypergraph on <= n vertices avoiding F,
//                measured in edges or incidences
//
// All solvers share one Russian-doll branch and bound over candidate items
// in lexicographic order (see rds.hpp).  Budget exhaustion is reported
// through SearchReport::exact, never thrown.

#include <cstdint>
#include <optional>
#include <vector>

#include "patgrid/bigint.hpp"
#include "patgrid/core.hpp"

namespace patgrid {

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;

  /// Defaults, with max_nodes taken from PATGRID_BUDGET_NODES when set.
  static Budget from_env();
};

struct SolveOptions {
  Budget budget{};
  int workers = 1;
};

SearchReport<DMatrix> solve_f(int n, const DMatrix& pattern, const Budget& budget = {});
SearchReport<DMatrix> solve_f(int n, const DPermutation& pattern, const Budget& budget = {});

struct WorstCaseReport {
  std::int64_t optimum = 0;
  bool exact = true;
  std::uint64_t nodes_explored = 0;
  std::optional<DPermutation> worst_pattern;
  DMatrix witness;
  std::size_t patterns_solved = 0;
};

/// f(n, k, d).  Patterns are deduplicated under the symmetries of the cube
/// (axis permutations and reversals), which leave f unchanged.  The optimum
/// does not depend on the worker count.
WorstCaseReport solve_f_worst(int n, int k, int d, const SolveOptions& options = {});

/// Orbit representatives of the d-permutations of [k] under axis
/// permutations and reversals, in enumeration order.
std::vector<DPermutation> pattern_orbit_representatives(int k, int d);

SearchReport<DMatrix> solve_g(int n, int k, int d, const Budget& budget = {});

SearchReport<OrderedGraph> solve_gex(int n, const OrderedGraph& pattern,
                                     const Budget& budget = {});

enum class ExMode { edges, weight };

struct ExOptions {
  Budget budget{};
  int max_n = 5;  // 2^(2^n - 1) candidate hypergraphs
};

SearchReport<OrderedHypergraph> solve_ex(int n, const OrderedHypergraph& pattern, ExMode mode,
                                         const ExOptions& options = {});

/// (k-1)^d f(n0,k,d) + d n0 m^d C(m,k) f(n0,k,d-1).
BigInt lemma3_rhs(int m, int n0, int k, int d, const BigInt& f_n0_d, const BigInt& f_n0_dm1);

struct Lemma3Report {
  int m = 0, n0 = 0, k = 0, d = 0;
  BigInt lhs, rhs, f_n0_d, f_n0_dm1;
  bool holds = false;
  bool exact = false;
};

/// Solves f(m n0, k, d), f(n0, k, d), f(n0, k, d-1) exactly and compares.
Lemma3Report verify_lemma3(int m, int n0, int k, int d, const SolveOptions& options = {});

struct Lemma4Constant {
  BigInt m;
  BigInt c;
};

/// m = ceil(k^(d/(d-1))) and c_d = k^d (d m C(m+1, k))^(d-1), both exact.
Lemma4Constant lemma4_constant(int k, int d);

struct Eq2Report {
  int n = 0;
  Permutation pi;
  std::int64_t ex_e = 0;
  std::int64_t ex_i = 0;
  BigInt factor;  // (4k-1)(k-1)
  bool holds = false;
  bool exact = false;
};

/// Checks ex_i(n, P(pi)) <= (4k-1)(k-1) ex_e(n, P(pi)) with exact solves.
Eq2Report verify_eq2(int n, const Permutation& pi, const ExOptions& options = {});

/// A d-dimensional permutation of [k^d] that is also a k-grid: block
/// (j_1..j_d) holds one edge whose axis-t coordinate is
/// (j_t - 1) k^(d-1) + 1 + (mixed-radix rank of the other block indices).
DPermutation grid_permutation(int k, int d);

}  // namespace patgrid
