#include "bnm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bnm/error.hpp"

namespace bnm {

double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

// Signed angle turning (b - a) into (c - b).
double exterior_angle_at(const Point& a, const Point& b, const Point& c) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double vx = c.x - b.x, vy = c.y - b.y;
  return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

}  // namespace

ConvexPointSet::ConvexPointSet(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < 2) throw Error(ErrorCode::TooFew, "need at least 2 points, got " + std::to_string(n));
  if (n % 2 != 0) throw Error(ErrorCode::OddCount, "point count " + std::to_string(n) + " is odd");
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::NonFinite, "");
  }
  {
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DuplicatePoint, "");
    }
  }

  std::vector<double> ext(n);
  if (n == 2) {
    ext[0] = ext[1] = std::numbers::pi;
  } else {
    std::size_t left = 0, right = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const Point& prev = points_[(t + n - 1) % n];
      const Point& next = points_[(t + 1) % n];
      const double c = cross(prev, points_[t], next);
      if (c > 0) ++left;
      if (c < 0) ++right;
      ext[t] = exterior_angle_at(prev, points_[t], next);
    }
    if (right == n) throw Error(ErrorCode::NotCcw, "vertices are in clockwise order");
    if (left != n) {
      throw Error(ErrorCode::NotStrictlyConvex,
                  std::to_string(n - left) + " vertices without a strict left turn");
    }
  }

  ext_prefix_.resize(n + 1);
  ext_prefix_[0] = 0.0;
  for (std::size_t t = 0; t < n; ++t) ext_prefix_[t + 1] = ext_prefix_[t] + ext[t];
  // All left turns but winding more than once.
  if (std::abs(ext_prefix_[n] - kTwoPi) > 1e-9) {
    throw Error(ErrorCode::NotStrictlyConvex, "total turning " + std::to_string(ext_prefix_[n]));
  }
}

double ConvexPointSet::exterior_angle(int t) const {
  const auto u = static_cast<std::size_t>(wrap(t));
  return ext_prefix_[u + 1] - ext_prefix_[u];
}

ConvexPointSet validate_convex_ccw(std::vector<Point> points) { return ConvexPointSet(std::move(points)); }

double turning_angle(const ConvexPointSet& pts, int i, int j) {
  const int n = pts.size();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    throw Error(ErrorCode::BadIndex, "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  const auto ext = pts.ext_prefix();
  const auto from = static_cast<std::size_t>(i + 1);
  const auto to = static_cast<std::size_t>(j);
  double tau = from <= to ? ext[to] - ext[from] : (ext[static_cast<std::size_t>(n)] - ext[from]) + ext[to];
  return std::clamp(tau, 0.0, std::nextafter(kTwoPi, 0.0));
}

const char* to_string(PolarityRegion r) {
  switch (r) {
    case PolarityRegion::LeftOfLine: return "LeftOfLine";
    case PolarityRegion::OnLine: return "OnLine";
    case PolarityRegion::PiMinus: return "PiMinus";
    case PolarityRegion::PiPlus: return "PiPlus";
    case PolarityRegion::PiZero: return "PiZero";
    case PolarityRegion::OutsideH: return "OutsideH";
  }
  return "?";
}

PolarityRegion classify_polarity_region(const Point& vi, const Point& vj, const Point& p) {
  if (vi == vj) throw Error(ErrorCode::DegenerateSegment, "");
  const double d2 = sq_dist(vi, vj);
  const double d = std::sqrt(d2);

  const double side = cross(vi, vj, p);
  if (std::abs(side) <= kRelTol * d * std::sqrt(sq_dist(vi, p))) return PolarityRegion::OnLine;
  if (side > 0) return PolarityRegion::LeftOfLine;

  // Circle through vi, vj of radius d / sqrt(3), centre on the right side.
  const double dx = (vj.x - vi.x) / d, dy = (vj.y - vi.y) / d;
  const double offset = d * std::sqrt(3.0) / 6.0;
  const Point centre{(vi.x + vj.x) / 2 + dy * offset, (vi.y + vj.y) / 2 - dx * offset};
  const double radius = d / std::sqrt(3.0);
  if (std::sqrt(sq_dist(centre, p)) > radius * (1 + kRelTol)) return PolarityRegion::OutsideH;

  const double limit = d * (1 + kRelTol);
  if (std::sqrt(sq_dist(vi, p)) > limit) return PolarityRegion::PiPlus;
  if (std::sqrt(sq_dist(vj, p)) > limit) return PolarityRegion::PiMinus;
  return PolarityRegion::PiZero;
}

}  // namespace bnm
