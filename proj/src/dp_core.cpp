#include "bnm/dp_core.hpp"

#include <algorithm>
#include <string>

#include "bnm/circular.hpp"
#include "bnm/error.hpp"

namespace bnm {

SubproblemTable::SubproblemTable(const ConvexPointSet& pts)
    : n_(pts.size()),
      values_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ / 2)),
      tags_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ / 2)) {
  const auto n = static_cast<std::size_t>(n_);

  // Points twice over, so arcs starting anywhere index without wrapping.
  std::vector<Point> ring(2 * n);
  for (std::size_t t = 0; t < 2 * n; ++t) ring[t] = pts[static_cast<int>(t % n)];
  std::vector<double> side(n);  // squared length of side (s, s+1)
  for (std::size_t s = 0; s < n; ++s) side[s] = sq_dist(ring[s], ring[s + 1]);

  const std::vector<double> empty(n, 0.0);
  for (std::size_t m = 2; m <= n; m += 2) {
    const double* prev = m == 2 ? empty.data() : &values_[(m / 2 - 2) * n];
    double* cur = &values_[(m / 2 - 1) * n];
    std::uint8_t* tag = &tags_[(m / 2 - 1) * n];
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t s1 = s + 1 == n ? 0 : s + 1;
      const std::size_t s2 = s + 2 >= n ? s + 2 - n : s + 2;
      const std::size_t tail = s + m - 2 >= n ? s + m - 2 - n : s + m - 2;
      const double pair = std::max(prev[s1], sq_dist(ring[s], ring[s + m - 1]));
      const double left = std::max(prev[s2], side[s]);
      const double right = std::max(prev[s], side[tail]);

      const double other = std::min(left, right);
      std::uint8_t t;
      if (pair <= other) {
        cur[s] = pair;
        t = static_cast<std::uint8_t>(Choice::UsePair);
      } else if (left <= right) {
        cur[s] = left;
        t = static_cast<std::uint8_t>(Choice::UseLeftEdge);
      } else {
        cur[s] = right;
        t = static_cast<std::uint8_t>(Choice::UseRightEdge);
      }
      if (pair * (1 + kRelTol) < other) t |= kNecessaryBit;
      tag[s] = t;
    }
  }
}

OneCascadeOptimum one_cascade_optimum(const SubproblemTable& table) {
  OneCascadeOptimum best{table.value(0, table.n()), 0};
  for (int s = 1; s < table.n(); ++s) {
    const double v = table.value(s, table.n());
    if (v < best.sq_value) best = {v, s};
  }
  return best;
}

std::vector<IndexPair> reconstruct(const SubproblemTable& table, int start, int size) {
  if (!table.in_domain(start, size)) {
    throw Error(ErrorCode::BadDomain, "(" + std::to_string(start) + ", " + std::to_string(size) + ")");
  }
  const int n = table.n();
  std::vector<IndexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(size / 2));
  int s = start;
  for (int m = size; m > 0; m -= 2) {
    switch (table.choice(s, m)) {
      case Choice::UsePair:
        pairs.push_back({s, wrap_index(s + m - 1, n)});
        s = wrap_index(s + 1, n);
        break;
      case Choice::UseLeftEdge:
        pairs.push_back({s, wrap_index(s + 1, n)});
        s = wrap_index(s + 2, n);
        break;
      case Choice::UseRightEdge:
        pairs.push_back({wrap_index(s + m - 2, n), wrap_index(s + m - 1, n)});
        break;
    }
  }
  return pairs;
}

}  // namespace bnm
