#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bnm/geometry.hpp"

namespace bnm {

enum class GenMode { Circle, Valtr, Cluster3 };

std::optional<GenMode> parse_gen_mode(std::string_view name);
const char* to_string(GenMode mode);

struct GenSpec {
  int n = 4;
  GenMode mode = GenMode::Circle;
  std::uint64_t seed = 0;
  double spread = 0.05;  // Cluster3 jitter; ignored by the other modes
};

inline constexpr double kMinAngleGap = 1e-6;

// n points on the unit circle at sorted uniform angles, no two closer than
// kMinAngleGap radians.
ConvexPointSet gen_circle(int n, std::uint64_t seed);

// Random convex polygon from paired x/y increments (Valtr's construction),
// scaled into [-1, 1]^2.
ConvexPointSet gen_valtr(int n, std::uint64_t seed);

/// Three corner clusters of a truncated equilateral triangle, scaled into
/// the unit disk. Each cluster is a short chord (a, b) with a tight arc of
/// an even number of points just beyond b, all farther from a than b is;
/// such chords tend to be forced, making 3-cascade optima common. `spread`
/// scales the random perturbation of the cluster shapes. For n < 6 this
/// falls back to gen_circle.
ConvexPointSet gen_cluster3(int n, std::uint64_t seed, double spread = 0.05);

ConvexPointSet generate(const GenSpec& spec);

}  // namespace bnm
