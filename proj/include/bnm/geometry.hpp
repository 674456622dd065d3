#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace bnm {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance for angle threshold tests (radians).
inline constexpr double kAngleTol = 1e-9;
// Relative tolerance for length equality tests.
inline constexpr double kRelTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// z-component of (b - a) x (c - a).
double cross(const Point& a, const Point& b, const Point& c);

/// An even-size, strictly convex, counterclockwise point sequence.
///
/// Construction validates the sequence and precomputes prefix sums of the
/// exterior angles, so that turning angles over any circular arc are O(1).
/// Instances are immutable.
class ConvexPointSet {
 public:
  /// Throws bnm::Error with TooFew, OddCount, NonFinite, DuplicatePoint,
  /// NotCcw or NotStrictlyConvex.
  explicit ConvexPointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const { return points_; }

  // ext_prefix()[t] = sum of exterior angles at vertices 0..t-1; n+1 entries.
  std::span<const double> ext_prefix() const { return ext_prefix_; }
  double exterior_angle(int t) const;

  int wrap(int i) const {
    const int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }

 private:
  std::vector<Point> points_;
  std::vector<double> ext_prefix_;
};

ConvexPointSet validate_convex_ccw(std::vector<Point> points);

/// Angle by which v_i -> v_{i+1} rotates ccw to align with v_{j-1} -> v_j.
/// Sum of exterior angles at i+1 .. j-1 (circular); in [0, 2pi).
double turning_angle(const ConvexPointSet& pts, int i, int j);

inline double sq_dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double sq_dist(const ConvexPointSet& pts, int i, int j) { return sq_dist(pts[i], pts[j]); }

enum class PolarityRegion { LeftOfLine, OnLine, PiMinus, PiPlus, PiZero, OutsideH };

const char* to_string(PolarityRegion r);

/// Locates p relative to the chord vi -> vj and the three areas cut out of
/// the circular segment on its right side (the locus from which the chord
/// subtends at least pi/3) by the radius-|vi vj| arcs centred at vi and vj.
/// Points at distance exactly |vi vj| from an endpoint go to PiZero.
PolarityRegion classify_polarity_region(const Point& vi, const Point& vj, const Point& p);

}  // namespace bnm
