#include "repro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "patgrid/containment.hpp"
#include "patgrid/enumeration.hpp"
#include "patgrid/extremal.hpp"
#include "patgrid/transforms.hpp"

namespace patgrid::repro {

namespace {

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

// ------------------------------------------------------------ observations

std::vector<Point> all_cells(int n, int d) {
  std::vector<Point> cells;
  Point p(static_cast<std::size_t>(d), 1);
  while (n > 0) {
    cells.push_back(p);
    int a = d - 1;
    while (a >= 0 && p[a] == n) p[a--] = 1;
    if (a < 0) break;
    ++p[a];
  }
  return cells;
}

int observations(std::ostream& out) {
  int failures = 0;
  out << "t-remainders of d-dimensional permutations\n";
  out << "k d patterns axes_checked failures\n";
  for (int k = 1; k <= 3; ++k) {
    for (int d = 2; d <= 3; ++d) {
      std::size_t patterns = 0, checked = 0, bad = 0;
      for_each_d_permutation(k, d, [&](const DPermutation& p) {
        ++patterns;
        for (int t = 1; t <= d; ++t) {
          ++checked;
          const auto rem = t_remainder(p.matrix(), t);
          bool ok = rem.dims() == d - 1 && !validate_permutation(rem) &&
                    static_cast<int>(rem.size()) == k;
          for (const auto& r : rem.edges()) {
            int preimages = 0;
            for (const auto& e : p.edges()) {
              Point proj = e;
              proj.erase(proj.begin() + (t - 1));
              if (proj == r) ++preimages;
            }
            ok = ok && preimages == 1;
          }
          if (!ok) ++bad;
        }
        return true;
      });
      out << k << ' ' << d << ' ' << patterns << ' ' << checked << ' ' << bad << '\n';
      if (bad) ++failures;
    }
  }

  out << "contractions of avoiders avoid\n";
  std::mt19937_64 rng(20240601);
  constexpr int kTrials = 1000;
  int bad = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto perms = enumerate_d_permutations(2, d);
    const auto& pattern = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    auto cells = all_cells(n, d);
    std::shuffle(cells.begin(), cells.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::vector<Point> chosen;
    for (const auto& c : cells) {
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) > density) continue;
      chosen.push_back(c);
      if (!avoids_matrix(pattern.matrix(), DMatrix::cube(d, n, chosen))) chosen.pop_back();
    }
    std::vector<int> bounds;
    for (int x = 1; x < n; ++x)
      if (std::bernoulli_distribution(0.5)(rng)) bounds.push_back(x);
    bounds.push_back(n);
    const auto host = DMatrix::cube(d, n, chosen);
    const auto contracted = contract(host, IntervalPartition(n, bounds));
    if (!avoids_matrix(pattern.matrix(), contracted)) ++bad;
  }
  out << "trials " << kTrials << " failures " << bad << '\n';
  if (bad) ++failures;
  out << "observations " << verdict(failures == 0) << '\n';
  return failures;
}

// ------------------------------------------------------------------ lemma3

int lemma3(std::ostream& out) {
  int failures = 0;
  out << "m n0 k d lhs rhs holds exact\n";
  const int cases[][4] = {{2, 1, 2, 2}, {2, 2, 2, 2}, {3, 1, 2, 2}};
  for (const auto& c : cases) {
    const auto r = verify_lemma3(c[0], c[1], c[2], c[3]);
    out << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << ' ' << r.lhs << ' ' << r.rhs
        << ' ' << (r.holds ? "true" : "false") << ' ' << (r.exact ? "true" : "false") << '\n';
    if (!r.holds || !r.exact) ++failures;
  }
  out << "lemma3 " << verdict(failures == 0) << '\n';
  return failures;
}

// ------------------------------------------------------------------ growth

int growth(std::ostream& out) {
  int failures = 0;
  const auto report = growth_report(Family::permutations, {1, 2, 3}, 3, 6);
  out << "avoiders of 123\n";
  out << "n count catalan root status\n";
  for (const auto& row : report.rows) {
    const BigInt catalan = binomial(2 * row.n, row.n) / (row.n + 1);
    const bool ok = row.count == catalan;
    std::ostringstream root;
    root.imbue(std::locale::classic());
    root << std::fixed << std::setprecision(6) << row.root;
    out << row.n << ' ' << row.count << ' ' << catalan << ' ' << root.str() << ' '
        << verdict(ok) << '\n';
    if (!ok) ++failures;
  }
  out << "growth " << verdict(failures == 0) << '\n';
  return failures;
}

// ------------------------------------------------------------------ oracle

std::vector<std::vector<int>> increasing_maps(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// All d-tuples of increasing maps, checked edge by edge.
bool naive_contains(const DMatrix& pattern, const std::set<Point>& host, int n) {
  const int d = pattern.dims();
  std::vector<std::vector<std::vector<int>>> choices;
  for (int t = 1; t <= d; ++t) choices.push_back(increasing_maps(pattern.side(t), n));
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (const auto& c : choices)
    if (c.empty()) return false;
  while (true) {
    bool ok = true;
    for (const auto& e : pattern.edges()) {
      Point img(static_cast<std::size_t>(d));
      for (int t = 0; t < d; ++t) img[t] = choices[t][idx[t]][e[t] - 1];
      if (!host.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int t = d - 1;
    while (t >= 0 && ++idx[t] == choices[t].size()) idx[t--] = 0;
    if (t < 0) return false;
  }
}

// Every way of cutting each axis into k intervals, every cell occupied.
bool naive_has_grid(const std::set<Point>& host, int n, int k, int d) {
  const auto cuts = increasing_maps(k - 1, n - 1);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  if (cuts.empty()) return false;
  auto block = [&](int t, int x) {
    const auto& c = cuts[idx[t]];
    return static_cast<int>(std::lower_bound(c.begin(), c.end(), x) - c.begin());
  };
  while (true) {
    std::set<Point> occupied;
    for (const auto& e : host) {
      Point b(static_cast<std::size_t>(d));
      for (int t = 0; t < d; ++t) b[t] = block(t, e[t]);
      occupied.insert(b);
    }
    if (static_cast<long>(occupied.size()) == std::lround(std::pow(k, d))) return true;
    int t = d - 1;
    while (t >= 0 && ++idx[t] == cuts.size()) idx[t--] = 0;
    if (t < 0) return false;
  }
}

template <class Forbidden>
std::int64_t brute_force_max(int n, int d, Forbidden&& forbidden) {
  const auto cells = all_cells(n, d);
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    const auto size = static_cast<std::int64_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    std::set<Point> host;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask >> i & 1U) host.insert(cells[i]);
    if (!forbidden(host)) best = size;
  }
  return best;
}

Permutation second_row(const DPermutation& p) {
  Permutation row;
  for (const auto& e : p.edges()) row.push_back(e[1]);
  return row;
}

int oracle(std::ostream& out) {
  int failures = 0;
  out << "problem n solver brute_force status\n";
  auto row = [&](const std::string& name, int n, std::int64_t solved, std::int64_t brute) {
    const bool ok = solved == brute;
    out << name << ' ' << n << ' ' << solved << ' ' << brute << ' ' << verdict(ok) << '\n';
    if (!ok) ++failures;
  };
  for (const auto& p : enumerate_d_permutations(2, 2)) {
    for (int n = 1; n <= 4; ++n)
      row("f[" + format_permutation(second_row(p)) + "]", n, solve_f(n, p).optimum,
          brute_force_max(n, 2, [&](const std::set<Point>& h) {
            return naive_contains(p.matrix(), h, n);
          }));
  }
  for (int n = 1; n <= 4; ++n)
    row("g[k=2,d=2]", n, solve_g(n, 2, 2).optimum, brute_force_max(n, 2, [&](const std::set<Point>& h) {
          return naive_has_grid(h, n, 2, 2);
        }));
  out << "oracle " << verdict(failures == 0) << '\n';
  return failures;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"observations", "lemma3", "growth", "oracle"};
  return names;
}

int run_suite(const std::string& suite, std::ostream& out) {
  if (suite == "observations") return observations(out);
  if (suite == "lemma3") return lemma3(out);
  if (suite == "growth") return growth(out);
  if (suite == "oracle") return oracle(out);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace patgrid::repro
