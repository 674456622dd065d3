#pragma once

#include <functional>
#include <vector>

#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm {

struct BaselineResult {
  double sq_value = 0.0;
  double value = 0.0;
  Matching matching;
};

/// Interval DP over linear ranges [i, j] with j - i odd: point i is matched to
/// some k with k - i odd, splitting the range into [i+1, k-1] and [k+1, j].
/// O(n^3) time, O(n^2) space. Every matching splits at point 0, so the answer
/// is the entry for [0, n-1].
BaselineResult cubic_solve(const ConvexPointSet& pts);

inline constexpr int kOracleMaxPoints = 20;

/// Calls `visit` once for every non-crossing perfect matching of n points in
/// convex position (Catalan(n/2) of them). Throws OddCount or TooLarge.
void oracle_enumerate(int n, const std::function<void(const Matching&)>& visit);

std::vector<Matching> oracle_enumerate(int n);

struct OracleResult {
  double sq_value = 0.0;
  double value = 0.0;
  std::vector<Matching> all_optimal;  // within relative kRelTol of the minimum; exact minimizers first
};

OracleResult oracle_solve(const ConvexPointSet& pts);

}  // namespace bnm
