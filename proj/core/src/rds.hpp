#pragma once

// Russian-doll branch and bound for hereditary maximization problems.
//
// Items 0..N-1 carry nonnegative weights.  A set is feasible when it avoids
// some forbidden configuration; feasibility is closed under subsets.  The
// oracle is asked can_add(i) only when i exceeds every item already in the
// current set, which lets containment checks anchor the new item as the
// image of the pattern's last element.
//
// R[p] is the optimum over items >= p.  Subproblems are solved for
// p = N-1 down to 0; subproblem p forces item p and bounds every partial
// solution at position q by weight + R[q].

#include <chrono>
#include <cstdint>
#include <vector>

#include "patgrid/extremal.hpp"

namespace patgrid::detail {

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts a node; true once the budget is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) return true;
    if ((nodes_ & 1023U) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

struct RdsResult {
  std::int64_t optimum = 0;
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
  bool exact = true;
};

/// Adds items greedily in increasing order; leaves the oracle empty.
template <class Oracle>
std::vector<std::size_t> greedy_solution(Oracle& oracle) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < oracle.item_count(); ++i) {
    if (oracle.can_add(i)) {
      oracle.add(i);
      chosen.push_back(i);
    }
  }
  for (std::size_t j = 0; j < chosen.size(); ++j) oracle.remove_last();
  return chosen;
}

template <class Oracle>
class RussianDoll {
 public:
  RussianDoll(Oracle& oracle, const Budget& budget) : oracle_(oracle), clock_(budget) {}

  RdsResult run() {
    const auto n = oracle_.item_count();
    bound_.assign(n + 1, 0);
    for (std::size_t p = n; p-- > 0;) {
      bound_[p] = bound_[p + 1];
      if (aborted_) continue;
      if (clock_.tick()) {
        aborted_ = true;
        continue;
      }
      if (!oracle_.can_add(p)) continue;
      const std::int64_t wp = oracle_.weight(p);
      best_ = bound_[p + 1];
      cap_ = wp + bound_[p + 1];
      done_ = false;
      oracle_.add(p);
      current_.assign(1, p);
      dfs(p + 1, wp);
      oracle_.remove_last();
      current_.clear();
      if (aborted_) {
        // Item p may still improve the suffix optimum; only a valid upper
        // bound remains, which no later subproblem will use.
        bound_[p] = cap_;
      } else {
        bound_[p] = best_;
      }
    }
    RdsResult out;
    out.optimum = best_weight_;
    out.witness = best_set_;
    out.nodes = clock_.nodes();
    out.exact = !aborted_;
    return out;
  }

 private:
  void dfs(std::size_t q, std::int64_t weight) {
    if (clock_.tick()) {
      aborted_ = true;
      return;
    }
    if (weight > best_) {
      best_ = weight;
      if (weight > best_weight_) {
        best_weight_ = weight;
        best_set_ = current_;
      }
      if (best_ >= cap_) {
        done_ = true;
        return;
      }
    }
    const auto n = oracle_.item_count();
    for (std::size_t i = q; i < n; ++i) {
      if (weight + bound_[i] <= best_) return;
      if (!oracle_.can_add(i)) continue;
      oracle_.add(i);
      current_.push_back(i);
      dfs(i + 1, weight + oracle_.weight(i));
      current_.pop_back();
      oracle_.remove_last();
      if (done_ || aborted_) return;
    }
  }

  Oracle& oracle_;
  BudgetClock clock_;
  std::vector<std::int64_t> bound_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_set_;
  std::int64_t best_weight_ = 0;
  std::int64_t best_ = 0;
  std::int64_t cap_ = 0;
  bool done_ = false;
  bool aborted_ = false;
};

}  // namespace patgrid::detail
