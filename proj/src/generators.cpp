#include "bnm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <vector>

#include "bnm/error.hpp"

namespace bnm {

namespace {

// Portable draws from mt19937_64: the standard distributions are
// implementation-defined, and generated instances must not depend on the
// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

void check_n(int n) {
  if (n < 4) throw Error(ErrorCode::TooFew, "generators need n >= 4");
  if (n % 2 != 0) throw Error(ErrorCode::OddCount, std::to_string(n));
}

constexpr double deg(double d) { return d * std::numbers::pi / 180.0; }

Point rotate(const Point& p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace

std::optional<GenMode> parse_gen_mode(std::string_view name) {
  if (name == "circle") return GenMode::Circle;
  if (name == "valtr") return GenMode::Valtr;
  if (name == "cluster3") return GenMode::Cluster3;
  return std::nullopt;
}

const char* to_string(GenMode mode) {
  switch (mode) {
    case GenMode::Circle: return "circle";
    case GenMode::Valtr: return "valtr";
    case GenMode::Cluster3: return "cluster3";
  }
  return "?";
}

ConvexPointSet gen_circle(int n, std::uint64_t seed) {
  check_n(n);
  Rng rng(seed);
  std::set<double> angles;
  while (static_cast<int>(angles.size()) < n) {
    const double a = rng.uniform() * kTwoPi;
    auto hi = angles.lower_bound(a);
    if (hi != angles.end() && *hi - a < kMinAngleGap) continue;
    if (hi != angles.begin() && a - *std::prev(hi) < kMinAngleGap) continue;
    // wraparound gap
    if (!angles.empty() && (*angles.begin() + kTwoPi - a < kMinAngleGap || a + kTwoPi - *angles.rbegin() < kMinAngleGap)) {
      continue;
    }
    angles.insert(a);
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (double a : angles) pts.push_back({std::cos(a), std::sin(a)});
  return ConvexPointSet(std::move(pts));
}

namespace {

// Increments of a random convex chain decomposition of sorted coordinates.
std::vector<double> chain_increments(Rng& rng, int n) {
  std::vector<double> c(static_cast<std::size_t>(n));
  for (double& v : c) v = rng.uniform();
  std::sort(c.begin(), c.end());
  const double lo = c.front(), hi = c.back();
  std::vector<double> inc;
  inc.reserve(c.size());
  double last_a = lo, last_b = lo;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (rng.coin()) {
      inc.push_back(c[i] - last_a);
      last_a = c[i];
    } else {
      inc.push_back(last_b - c[i]);
      last_b = c[i];
    }
  }
  inc.push_back(hi - last_a);
  inc.push_back(last_b - hi);
  return inc;
}

}  // namespace

ConvexPointSet gen_valtr(int n, std::uint64_t seed) {
  check_n(n);
  Rng rng(seed);
  for (;;) {
    std::vector<double> dx = chain_increments(rng, n);
    std::vector<double> dy = chain_increments(rng, n);
    rng.shuffle(dy);
    std::vector<Point> vecs(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < vecs.size(); ++i) vecs[i] = {dx[i], dy[i]};
    std::sort(vecs.begin(), vecs.end(),
              [](const Point& a, const Point& b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

    std::vector<Point> pts;
    pts.reserve(vecs.size());
    Point cur{0, 0};
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const Point& v : vecs) {
      pts.push_back(cur);
      min_x = std::min(min_x, cur.x);
      max_x = std::max(max_x, cur.x);
      min_y = std::min(min_y, cur.y);
      max_y = std::max(max_y, cur.y);
      cur = {cur.x + v.x, cur.y + v.y};
    }
    const double scale = 2.0 / std::max(max_x - min_x, max_y - min_y);
    for (Point& p : pts) p = {(p.x - min_x) * scale - 1.0, (p.y - min_y) * scale - 1.0};
    try {
      return ConvexPointSet(std::move(pts));
    } catch (const Error&) {
      // collinear increments or a zero-length side; draw again
    }
  }
}

ConvexPointSet gen_cluster3(int n, std::uint64_t seed, double spread) {
  check_n(n);
  if (n < 6) return gen_circle(n, seed);
  Rng rng(seed);

  struct Cluster {
    int count = 0;         // points on the arc beyond b
    double radius = 1.0;   // arc radius about a; the chord (a, b) has length 1
    double first = 0.0;    // arc angles below the chord, first > last > 0
    double last = 0.0;
    double exit = 0.0;     // direction of the final arc point -> b
  };

  for (;;) {
    Cluster clusters[3];
    for (int p = 0; p < (n - 6) / 2; ++p) clusters[rng.below(3)].count += 2;

    double max_exit = 0.0, max_first = 0.0;
    for (Cluster& c : clusters) {
      const double excess = spread * rng.uniform(-0.3, 1.0);
      c.radius = 1.0 + excess;
      c.last = std::max(excess, 0.01) * rng.uniform(2.5, 3.5);
      c.first = c.last + deg(rng.uniform(0.5, 3.0));
      const Point tail{c.radius * std::cos(c.last), -c.radius * std::sin(c.last)};
      c.exit = c.count == 0 ? 0.0 : std::atan2(-tail.y, 1.0 - tail.x);
      max_exit = std::max(max_exit, c.exit);
      if (c.count > 0) max_first = std::max(max_first, c.first);
    }
    // Sides between clusters must turn left at both ends.
    const double side_lo = max_exit, side_hi = deg(120.0) - max_first;
    if (side_hi - side_lo < deg(1.0)) continue;
    const double side_dir = side_lo + (side_hi - side_lo) * rng.uniform(0.3, 0.7);
    const double side_len = rng.uniform(1.2, 1.8);

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::vector<Point> skeleton;
    Point a{0, 0};
    for (int k = 0; k < 3; ++k) {
      const Cluster& c = clusters[k];
      const double base = deg(120.0 * k);
      auto place = [&](const Point& local) {
        const Point r = rotate(local, base);
        return Point{a.x + r.x, a.y + r.y};
      };
      pts.push_back(a);
      skeleton.push_back(a);
      for (int t = 0; t < c.count; ++t) {
        const double ang = -(c.first + (c.last - c.first) * t / (c.count - 1));
        pts.push_back(place({c.radius * std::cos(ang), c.radius * std::sin(ang)}));
      }
      const Point b = place({1.0, 0.0});
      pts.push_back(b);
      skeleton.push_back(b);
      a = {b.x + side_len * std::cos(base + side_dir), b.y + side_len * std::sin(base + side_dir)};
    }

    Point centre{0, 0};
    for (const Point& p : skeleton) centre = {centre.x + p.x / 6, centre.y + p.y / 6};
    double reach = 0.0;
    for (const Point& p : pts) reach = std::max(reach, std::sqrt(sq_dist(p, centre)));
    const double turn = rng.uniform() * kTwoPi;
    for (Point& p : pts) p = rotate({(p.x - centre.x) / reach, (p.y - centre.y) / reach}, turn);
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(n))),
                pts.end());
    try {
      return ConvexPointSet(std::move(pts));
    } catch (const Error&) {
    }
  }
}

ConvexPointSet generate(const GenSpec& spec) {
  switch (spec.mode) {
    case GenMode::Circle: return gen_circle(spec.n, spec.seed);
    case GenMode::Valtr: return gen_valtr(spec.n, spec.seed);
    case GenMode::Cluster3: return gen_cluster3(spec.n, spec.seed, spec.spread);
  }
  throw Error(ErrorCode::Internal, "unknown generator mode");
}

}  // namespace bnm
