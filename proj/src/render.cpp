#include "bnm/render.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "bnm/structure.hpp"

namespace bnm {

std::string render_svg(const ConvexPointSet& pts, const Matching& m) {
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * extent;
  const double radius = 0.01 * extent;
  const double stroke = 0.004 * extent;
  // SVG y grows downwards.
  auto X = [](const Point& p) { return p.x; };
  auto Y = [](const Point& p) { return -p.y; };

  const VerifyReport report = verify_matching(pts, m);
  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.9g} {:.9g} {:.9g} {:.9g}\">\n", min_x - margin,
      -max_y - margin, (max_x - min_x) + 2 * margin, (max_y - min_y) + 2 * margin);

  out += fmt::format("  <polyline fill=\"none\" stroke=\"#cccccc\" stroke-width=\"{:.6g}\" points=\"", stroke);
  for (int t = 0; t <= pts.size(); ++t) {
    const Point& p = pts[t % pts.size()];
    out += fmt::format("{}{:.9g},{:.9g}", t == 0 ? "" : " ", X(p), Y(p));
  }
  out += "\"/>\n";

  for (const IndexPair& pair : m.pairs) {
    if (pair.a < 0 || pair.a >= pts.size() || pair.b < 0 || pair.b >= pts.size()) continue;
    const bool longest = pair == report.longest;
    out += fmt::format(
        "  <line class=\"{}\" x1=\"{:.9g}\" y1=\"{:.9g}\" x2=\"{:.9g}\" y2=\"{:.9g}\" stroke=\"{}\" "
        "stroke-width=\"{:.6g}\"/>\n",
        longest ? "longest" : "pair", X(pts[pair.a]), Y(pts[pair.a]), X(pts[pair.b]), Y(pts[pair.b]),
        longest ? "#d62728" : "#1f77b4", longest ? 2 * stroke : stroke);
  }

  for (int t = 0; t < pts.size(); ++t) {
    out += fmt::format("  <circle cx=\"{:.9g}\" cy=\"{:.9g}\" r=\"{:.6g}\" fill=\"black\"/>\n", X(pts[t]),
                       Y(pts[t]), radius);
  }

  if (!m.pairs.empty()) {
    const Point& a = pts[report.longest.a];
    const Point& b = pts[report.longest.b];
    out += fmt::format(
        "  <text x=\"{:.9g}\" y=\"{:.9g}\" font-size=\"{:.6g}\" fill=\"#d62728\">{:.6g}</text>\n", (a.x + b.x) / 2,
        -(a.y + b.y) / 2, 4 * radius, report.value);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bnm
