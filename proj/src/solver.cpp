#include "bnm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "bnm/circular.hpp"
#include "bnm/error.hpp"
#include "bnm/structure.hpp"

namespace bnm {

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Negative: return "negative";
    case Polarity::Positive: return "positive";
    case Polarity::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Structure s) {
  return s == Structure::ThreeCascade ? "three-cascade" : "one-cascade";
}

Polarity candidate_polarity(const ConvexPointSet& pts, int i, int j) {
  const int n = pts.size();
  bool minus = false, plus = false;
  for (int t = wrap_index(i + 1, n); t != j; t = wrap_index(t + 1, n)) {
    switch (classify_polarity_region(pts[i], pts[j], pts[t])) {
      case PolarityRegion::PiMinus: minus = true; break;
      case PolarityRegion::PiPlus: plus = true; break;
      default: return Polarity::Unknown;
    }
  }
  if (minus == plus) return Polarity::Unknown;
  return minus ? Polarity::Negative : Polarity::Positive;
}

std::vector<CandidateDiagonal> enumerate_candidates(const ConvexPointSet& pts, const SubproblemTable& table,
                                                    bool annotate_polarity) {
  const int n = pts.size();
  std::vector<CandidateDiagonal> out;
  // Size-major, matching the table layout.
  for (int size = 4; size <= n - 2; size += 2) {
    for (int i = 0; i < n; ++i) {
      if (!table.necessary(i, size)) continue;
      const int j = wrap_index(i + size - 1, n);
      const double tau = turning_angle(pts, i, j);
      if (tau > kCandidateTauLimit) continue;
      CandidateDiagonal c{i, j, tau, Polarity::Unknown};
      if (annotate_polarity) c.polarity = candidate_polarity(pts, i, j);
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CandidateDiagonal& a, const CandidateDiagonal& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  return out;
}

SolveReport solve(const ConvexPointSet& pts) {
  const auto started = std::chrono::steady_clock::now();
  const int n = pts.size();
  const SubproblemTable table(pts);

  const OneCascadeOptimum one = one_cascade_optimum(table);
  double best = one.sq_value;
  bool three = false;
  std::tuple<int, int, int> arg{-1, -1, -1};  // (i, j, k) of the best 3-cascade split

  const std::vector<CandidateDiagonal> candidates = enumerate_candidates(pts, table);
  for (const CandidateDiagonal& c : candidates) {
    const int inner = arc_size(c.i, c.j, n);
    const double own = table.value(c.i, inner);
    if (own > best) continue;
    const int second_start = wrap_index(c.j + 1, n);
    const int remaining = n - inner;
    for (int second = 2; second <= remaining - 2; second += 2) {
      const int third = remaining - second;
      const int k = wrap_index(second_start + second - 1, n);
      const double v = std::max({own, table.value(second_start, second), table.value(wrap_index(k + 1, n), third)});
      if (v < best || (three && v == best && std::tuple{c.i, c.j, k} < arg)) {
        best = v;
        three = true;
        arg = {c.i, c.j, k};
      }
    }
  }

  SolveReport report;
  report.sq_value = best;
  report.value = std::sqrt(best);
  report.candidate_count = static_cast<int>(candidates.size());
  report.matching.n = n;
  if (three) {
    report.structure = Structure::ThreeCascade;
    const auto [i, j, k] = arg;
    const int pieces[3][2] = {{i, j}, {wrap_index(j + 1, n), k}, {wrap_index(k + 1, n), wrap_index(i - 1, n)}};
    for (const auto& piece : pieces) {
      auto part = reconstruct(table, piece[0], arc_size(piece[0], piece[1], n));
      report.matching.pairs.insert(report.matching.pairs.end(), part.begin(), part.end());
    }
  } else {
    report.structure = Structure::OneCascadeOrLess;
    report.matching.pairs = reconstruct(table, one.best_start, n);
  }

  const VerifyReport check = verify_matching(pts, report.matching);
  if (!check.ok() || check.sq_value != report.sq_value) {
    throw Error(ErrorCode::Internal, "reconstructed matching failed verification");
  }
  report.cascades = static_cast<int>(cascade_decomposition(report.matching).cascades.size());
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace bnm
