#include "bnm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bnm/error.hpp"

namespace bnm {

BaselineResult cubic_solve(const ConvexPointSet& pts) {
  const int n = pts.size();
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> best(un * un, 0.0);
  std::vector<int> split(un * un, -1);
  auto at = [un](int i, int j) { return static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j); };
  // Empty ranges (i > j) read as 0.
  auto b = [&](int i, int j) { return i > j ? 0.0 : best[at(i, j)]; };

  for (int len = 2; len <= n; len += 2) {
    for (int i = 0; i + len - 1 < n; ++i) {
      const int j = i + len - 1;
      double top = std::numeric_limits<double>::infinity();
      int arg = -1;
      for (int k = i + 1; k <= j; k += 2) {
        const double v = std::max({sq_dist(pts, i, k), b(i + 1, k - 1), b(k + 1, j)});
        if (v < top) {
          top = v;
          arg = k;
        }
      }
      best[at(i, j)] = top;
      split[at(i, j)] = arg;
    }
  }

  BaselineResult out;
  out.sq_value = best[at(0, n - 1)];
  out.value = std::sqrt(out.sq_value);
  out.matching.n = n;
  std::vector<std::pair<int, int>> todo{{0, n - 1}};
  while (!todo.empty()) {
    const auto [i, j] = todo.back();
    todo.pop_back();
    if (i > j) continue;
    const int k = split[at(i, j)];
    out.matching.pairs.push_back({i, k});
    todo.emplace_back(i + 1, k - 1);
    todo.emplace_back(k + 1, j);
  }
  return out;
}

namespace {

void check_oracle_size(int n) {
  if (n % 2 != 0 || n < 0) throw Error(ErrorCode::OddCount, std::to_string(n));
  if (n > kOracleMaxPoints) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " > " + std::to_string(kOracleMaxPoints));
  }
}

// Matches the lowest unmatched index of [lo, hi) to each partner leaving an
// even gap, then recurses on both sides. `rest` holds ranges still to fill.
void enumerate_into(Matching& current, std::vector<std::pair<int, int>>& rest,
                    const std::function<void(const Matching&)>& visit) {
  if (rest.empty()) {
    visit(current);
    return;
  }
  const auto [lo, hi] = rest.back();
  rest.pop_back();
  if (lo >= hi) {
    enumerate_into(current, rest, visit);
  } else {
    for (int k = lo + 1; k < hi; k += 2) {
      current.pairs.push_back({lo, k});
      rest.emplace_back(k + 1, hi);
      rest.emplace_back(lo + 1, k);
      enumerate_into(current, rest, visit);
      rest.pop_back();
      rest.pop_back();
      current.pairs.pop_back();
    }
  }
  rest.emplace_back(lo, hi);
}

}  // namespace

void oracle_enumerate(int n, const std::function<void(const Matching&)>& visit) {
  check_oracle_size(n);
  Matching current{n, {}};
  current.pairs.reserve(static_cast<std::size_t>(n / 2));
  std::vector<std::pair<int, int>> rest{{0, n}};
  enumerate_into(current, rest, visit);
}

std::vector<Matching> oracle_enumerate(int n) {
  std::vector<Matching> all;
  oracle_enumerate(n, [&](const Matching& m) { all.push_back(m); });
  return all;
}

OracleResult oracle_solve(const ConvexPointSet& pts) {
  const int n = pts.size();
  check_oracle_size(n);
  auto bottleneck = [&](const Matching& m) {
    double v = 0.0;
    for (const IndexPair& p : m.pairs) v = std::max(v, sq_dist(pts, p.a, p.b));
    return v;
  };

  OracleResult out;
  out.sq_value = std::numeric_limits<double>::infinity();
  oracle_enumerate(n, [&](const Matching& m) { out.sq_value = std::min(out.sq_value, bottleneck(m)); });
  // Squared values: relative tolerance doubles.
  const double cutoff = out.sq_value * (1 + 2 * kRelTol);
  oracle_enumerate(n, [&](const Matching& m) {
    if (bottleneck(m) <= cutoff) out.all_optimal.push_back(m);
  });
  // Exact minimizers first, so front() carries out.sq_value.
  std::stable_partition(out.all_optimal.begin(), out.all_optimal.end(),
                        [&](const Matching& m) { return bottleneck(m) == out.sq_value; });
  out.value = std::sqrt(out.sq_value);
  return out;
}

}  // namespace bnm
