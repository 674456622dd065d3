#pragma once

#include <string>

#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm {

/// SVG drawing of a point set and a matching: polygon boundary as a light
/// polyline, one <circle> per point, one <line> per pair, the longest pair
/// stroked in red and labelled with its length (6 significant digits).
/// The view box fits the points with a 5% margin; y points up.
std::string render_svg(const ConvexPointSet& pts, const Matching& m);

}  // namespace bnm
