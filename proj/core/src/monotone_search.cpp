#include "monotone_search.hpp"

#include <tuple>

namespace patgrid::detail {

MonotoneSearch::MonotoneSearch(const MonotoneProblem& problem) : problem_(problem) {
  image_.resize(problem_.domain.size());
  for (std::size_t m = 0; m < image_.size(); ++m)
    image_[m].assign(static_cast<std::size_t>(problem_.domain[m]) + 2, 0);
}

void MonotoneSearch::set_host(std::span<const int> host) {
  host_ = host;
  host_count_ = problem_.arity == 0 ? 0 : host.size() / static_cast<std::size_t>(problem_.arity);
}

void MonotoneSearch::reset() {
  undo_to(0);
  pin_mark_ = 0;
}

bool MonotoneSearch::ranges_fit() const {
  for (std::size_t m = 0; m < problem_.domain.size(); ++m)
    if (problem_.domain[m] > problem_.range[m]) return false;
  return true;
}

void MonotoneSearch::window(int m, int x, int& lo, int& hi) const {
  const auto& img = image_[m];
  const int k = problem_.domain[m];
  lo = x;
  for (int below = x - 1; below >= 1; --below) {
    if (img[below] != 0) {
      lo = img[below] + (x - below);
      break;
    }
  }
  hi = problem_.range[m] - (k - x);
  for (int above = x + 1; above <= k; ++above) {
    if (img[above] != 0) {
      hi = img[above] - (above - x);
      break;
    }
  }
}

bool MonotoneSearch::feasible(int m, int x, int y) const {
  int lo = 0, hi = 0;
  window(m, x, lo, hi);
  return lo <= y && y <= hi;
}

void MonotoneSearch::assign(int m, int x, int y) {
  image_[m][x] = y;
  trail_.emplace_back(m, x);
}

void MonotoneSearch::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    auto [m, x] = trail_.back();
    image_[m][x] = 0;
    trail_.pop_back();
  }
}

bool MonotoneSearch::pin(int m, int x, int y) {
  undo_to(pin_mark_);
  bool ok = true;
  if (x < 1 || x > problem_.domain[m]) {
    ok = false;
  } else if (int cur = image_[m][x]; cur != 0) {
    ok = cur == y;
  } else if (feasible(m, x, y)) {
    assign(m, x, y);
  } else {
    ok = false;
  }
  pin_mark_ = trail_.size();
  return ok;
}

std::size_t MonotoneSearch::first_at_least(int v) const {
  const auto stride = static_cast<std::size_t>(problem_.arity);
  std::size_t lo = 0, hi = host_count_;
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (host_[mid * stride] < v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool MonotoneSearch::find() {
  if (!ranges_fit()) return false;
  undo_to(pin_mark_);
  chosen_.assign(problem_.tuple_count(), 0);
  bool found = false;
  auto cb = [&found]() {
    found = true;
    return false;
  };
  dfs(0, cb);
  return found;
}

Maps MonotoneSearch::maps() const {
  Maps out(image_.size());
  for (std::size_t m = 0; m < image_.size(); ++m) {
    const int k = problem_.domain[m];
    out[m].resize(static_cast<std::size_t>(k));
    int prev = 0;
    for (int x = 1; x <= k; ++x) {
      prev = image_[m][x] != 0 ? image_[m][x] : prev + 1;
      out[m][x - 1] = prev;
    }
  }
  return out;
}

std::optional<Maps> lex_least_embedding(const MonotoneProblem& problem,
                                        std::span<const int> host) {
  MonotoneSearch search(problem);
  search.set_host(host);
  if (!search.find()) return std::nullopt;
  Maps best = search.maps();

  // Fix variables one at a time in concatenated order; for each, probe the
  // values below the current witness and keep the first that still extends.
  std::vector<std::tuple<int, int, int>> fixed;
  auto apply = [&](int m, int x, int y) {
    search.reset();
    for (auto [fm, fx, fy] : fixed)
      if (!search.pin(fm, fx, fy)) return false;
    return search.pin(m, x, y) && search.find();
  };
  for (int m = 0; m < problem.map_count(); ++m) {
    for (int x = 1; x <= problem.domain[m]; ++x) {
      const int lower = x == 1 ? 1 : best[m][x - 2] + 1;
      for (int y = lower; y < best[m][x - 1]; ++y) {
        if (apply(m, x, y)) {
          best = search.maps();
          break;
        }
      }
      fixed.emplace_back(m, x, best[m][x - 1]);
    }
  }
  return best;
}

}  // namespace patgrid::detail
