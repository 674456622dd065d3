#pragma once

#include <chrono>
#include <vector>

#include "bnm/dp_core.hpp"
#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm {

enum class Polarity { Negative, Positive, Unknown };

const char* to_string(Polarity p);

// A necessary diagonal whose turning angle is at most 2pi/3 (+ kAngleTol).
struct CandidateDiagonal {
  int i = 0;
  int j = 0;
  double tau = 0.0;
  Polarity polarity = Polarity::Unknown;

  // Negative polarity has its pole at i, positive at j.
  int pole() const { return polarity == Polarity::Positive ? j : i; }
};

inline constexpr double kCandidateTauLimit = 2.0 * std::numbers::pi / 3.0 + kAngleTol;

/// All ordered pairs (i, j) with <i, j> of even size in [4, n-2], flagged
/// necessary in `table`, and turning angle within kCandidateTauLimit. With
/// `annotate_polarity` each candidate's interior points are classified
/// against the chord; mixed or PiZero observations give Polarity::Unknown.
std::vector<CandidateDiagonal> enumerate_candidates(const ConvexPointSet& pts, const SubproblemTable& table,
                                                    bool annotate_polarity = false);

Polarity candidate_polarity(const ConvexPointSet& pts, int i, int j);

enum class Structure { OneCascadeOrLess, ThreeCascade };

const char* to_string(Structure s);

struct SolveReport {
  double sq_value = 0.0;
  double value = 0.0;
  Matching matching;
  int candidate_count = 0;
  int cascades = 0;
  Structure structure = Structure::OneCascadeOrLess;
  std::chrono::nanoseconds elapsed{0};
};

/// Bottleneck non-crossing perfect matching in O(n^2).
///
/// The best matching with at most one cascade comes straight from the
/// full-circle table entries. Otherwise some optimum consists of three
/// one-cascade pieces <i, j>, <j+1, k>, <k+1, i-1> where (i, j) is a
/// candidate diagonal; there are O(n) candidates and O(n) split points each.
/// Ties keep the one-cascade answer, then the smallest (i, j, k).
SolveReport solve(const ConvexPointSet& pts);

}  // namespace bnm
