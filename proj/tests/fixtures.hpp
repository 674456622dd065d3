#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "bnm/baselines.hpp"
#include "bnm/circular.hpp"
#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm::test {

inline ConvexPointSet sq4() { return ConvexPointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline ConvexPointSet hex6() {
  std::vector<Point> pts;
  for (int k = 0; k < 6; ++k) pts.push_back({std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3)});
  return ConvexPointSet(std::move(pts));
}

inline Point on_circle_deg(double deg) {
  const double r = deg * std::numbers::pi / 180.0;
  return {std::cos(r), std::sin(r)};
}

// Unit-circle points at 0, 10, 20 and 180 degrees.
inline ConvexPointSet skew4() {
  return ConvexPointSet({on_circle_deg(0), on_circle_deg(10), on_circle_deg(20), on_circle_deg(180)});
}

// Exhaustive enumeration of SKEW4's two matchings: {(0,1),(2,3)} has
// bottleneck |v2 v3| = 2 sin(80 deg); {(0,3),(1,2)} has |v0 v3| = 2.
inline constexpr double kSkew4Value = 1.969615506024416;
inline constexpr double kSkew4SqValue = 3.879385241571817;

// Three corner clusters: chords of length 1 at 0, 120 and 240 degrees, each
// followed by two points at distance 1.02 from the chord's start. Exhaustive
// search: the unique optimum uses the three chords plus the short pairs
// (value 1), three singleton cascades around one 3-bounded region.
inline ConvexPointSet three_corner_gadget() {
  return ConvexPointSet({
      {0, 0},
      {1.0144123332756387, -0.10661903253300654},
      {1.0186021254496653, -0.053382675367802709},
      {1, 0},
      {0.41359803724112443, 1.4886681087712395},
      {-0.0012733386961915061, 2.4204844755666923},
      {-0.049472272493213065, 2.3974947634433748},
      {-0.08640196275887535, 2.354693512555678},
      {-1.0824253813790667, 1.1025204615918158},
      {-1.6819663387173898, 0.27732312732936992},
      {-1.6379571970943947, 0.24707648228748369},
      {-1.5824253813790672, 0.23649505780737745},
  });
}

inline double bottleneck_sq(const ConvexPointSet& pts, const Matching& m) {
  double v = 0.0;
  for (const IndexPair& p : m.pairs) v = std::max(v, sq_dist(pts, p.a, p.b));
  return v;
}

inline bool contains_pair(const Matching& m, int a, int b) {
  return std::any_of(m.pairs.begin(), m.pairs.end(),
                     [&](const IndexPair& p) { return (p.a == a && p.b == b) || (p.a == b && p.b == a); });
}

// Brute-force view of the restricted subproblem on the arc <start, start+size-1>:
// every matching of the arc (positions 0..size-1 along it) whose pairs that
// are not consecutive along the arc form a single nested chain.
struct ArcOracle {
  double sq_value = 0.0;
  std::vector<Matching> optimal;  // in original indices
};

inline bool is_chain(const Matching& local) {
  std::vector<IndexPair> wide;
  for (IndexPair p : local.pairs) {
    if (p.a > p.b) std::swap(p.a, p.b);
    if (p.b - p.a > 1) wide.push_back(p);
  }
  std::sort(wide.begin(), wide.end());
  for (std::size_t t = 1; t < wide.size(); ++t) {
    if (!(wide[t - 1].a < wide[t].a && wide[t].b < wide[t - 1].b)) return false;
  }
  return true;
}

inline ArcOracle arc_oracle(const ConvexPointSet& pts, int start, int size) {
  const int n = pts.size();
  ArcOracle out;
  out.sq_value = INFINITY;
  std::vector<Matching> admissible;
  for (const Matching& local : oracle_enumerate(size)) {
    if (!is_chain(local)) continue;
    Matching global{n, {}};
    for (const IndexPair& p : local.pairs) {
      global.pairs.push_back({wrap_index(start + p.a, n), wrap_index(start + p.b, n)});
    }
    out.sq_value = std::min(out.sq_value, bottleneck_sq(pts, global));
    admissible.push_back(std::move(global));
  }
  for (Matching& m : admissible) {
    if (bottleneck_sq(pts, m) == out.sq_value) out.optimal.push_back(std::move(m));
  }
  return out;
}

// Independent segment intersection test on coordinates.
inline bool coords_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto orient = [](const Point& p, const Point& q, const Point& r) {
    const double v = cross(p, q, r);
    return (v > 0) - (v < 0);
  };
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

inline std::uint64_t test_seed(int i) { return 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1); }

}  // namespace bnm::test
