#pragma once

// Backtracking engine shared by matrix and graph containment.
//
// A pattern is a list of tuples; slot s of every tuple is mapped through
// injection number slot_map[s].  Each injection is strictly increasing from
// [domain[m]] into [range[m]].  Matrices use one injection per axis, graphs
// use a single injection for both endpoints.  Host tuples must be sorted
// lexicographically so that candidates can be located by their first slot.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace patgrid::detail {

struct MonotoneProblem {
  int arity = 0;
  std::vector<int> slot_map;
  std::vector<int> domain;
  std::vector<int> range;
  std::vector<int> pattern;  // flat, tuple-major

  std::size_t tuple_count() const {
    return arity == 0 ? 0 : pattern.size() / static_cast<std::size_t>(arity);
  }
  int map_count() const { return static_cast<int>(domain.size()); }
};

using Maps = std::vector<std::vector<int>>;  // maps[m][x - 1]

class MonotoneSearch {
 public:
  explicit MonotoneSearch(const MonotoneProblem& problem);

  /// Host tuples, flat and lexicographically sorted.  The span must outlive
  /// subsequent searches.
  void set_host(std::span<const int> host);

  /// Clears pins and any partial assignment.
  void reset();

  /// Pre-assigns injection m at x to y.  Returns false when the pin clashes
  /// with earlier pins or leaves no room for the remaining values.
  bool pin(int m, int x, int y);

  /// Is there a completion of the current pins that maps every pattern tuple
  /// onto a host tuple?  On success the assignment is retained for maps().
  bool find();

  /// Visits every assignment of pattern tuples to host tuple indices that
  /// extends to an embedding.  The visitor returns false to stop.
  template <class Visitor>
  void for_each(Visitor&& visit) {
    if (!ranges_fit()) return;
    undo_to(pin_mark_);
    chosen_.assign(problem_.tuple_count(), 0);
    auto cb = [&]() { return visit(std::span<const std::size_t>(chosen_)); };
    dfs(0, cb);
  }

  /// Injections completed with the smallest admissible value for every
  /// unassigned point.  Valid after a successful find().
  Maps maps() const;

 private:
  template <class Callback>
  bool dfs(std::size_t i, Callback& cb);

  bool ranges_fit() const;
  bool feasible(int m, int x, int y) const;
  void window(int m, int x, int& lo, int& hi) const;
  void assign(int m, int x, int y);
  void undo_to(std::size_t mark);
  std::size_t first_at_least(int v) const;

  const MonotoneProblem& problem_;
  std::span<const int> host_;
  std::size_t host_count_ = 0;
  std::vector<std::vector<int>> image_;  // image_[m][x], 0 = unassigned
  std::vector<std::pair<int, int>> trail_;
  std::vector<std::size_t> chosen_;
  std::size_t pin_mark_ = 0;
};

template <class Callback>
bool MonotoneSearch::dfs(std::size_t i, Callback& cb) {
  if (i == problem_.tuple_count()) return cb();
  const int arity = problem_.arity;
  const int* tuple = problem_.pattern.data() + i * static_cast<std::size_t>(arity);
  const int m0 = problem_.slot_map[0];
  int lo = 0, hi = 0;
  if (int y = image_[m0][tuple[0]]; y != 0) {
    lo = hi = y;
  } else {
    window(m0, tuple[0], lo, hi);
  }
  for (std::size_t h = first_at_least(lo); h < host_count_; ++h) {
    const int* cand = host_.data() + h * static_cast<std::size_t>(arity);
    if (cand[0] > hi) break;
    const auto mark = trail_.size();
    bool ok = true;
    for (int s = 0; s < arity && ok; ++s) {
      const int m = problem_.slot_map[s];
      const int x = tuple[s];
      const int y = cand[s];
      if (int cur = image_[m][x]; cur != 0) {
        ok = cur == y;
      } else if (feasible(m, x, y)) {
        assign(m, x, y);
      } else {
        ok = false;
      }
    }
    if (ok) {
      chosen_[i] = h;
      if (!dfs(i + 1, cb)) {
        return false;
      }
    }
    undo_to(mark);
  }
  return true;
}

/// Lexicographically least embedding (maps concatenated in map order), or
/// an empty optional when none exists.
std::optional<Maps> lex_least_embedding(const MonotoneProblem& problem,
                                        std::span<const int> host);

}  // namespace patgrid::detail
