#pragma once

// Index arithmetic on the circular sequence 0..n-1. The arc <i, j> is
// i, i+1, ..., j taken mod n; <i, j> and <j, i> differ.

#include <string>

#include "bnm/error.hpp"

namespace bnm {

constexpr int wrap_index(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

constexpr int arc_size(int i, int j, int n) { return wrap_index(j - i, n) + 1; }

// A matching containing (i, j) exists iff <i, j> has even size.
constexpr bool feasible(int i, int j, int n) { return arc_size(i, j, n) % 2 == 0; }

constexpr bool arc_contains(int i, int j, int k, int n) { return wrap_index(k - i, n) <= wrap_index(j - i, n); }

struct ArcInterval {
  int start = 0;
  int end = 0;
  int n = 1;

  constexpr int size() const { return arc_size(start, end, n); }
  constexpr bool contains(int k) const { return arc_contains(start, end, k, n); }
};

// Chords (a, b) and (c, d) of a strictly convex polygon cross iff exactly one
// of c, d lies strictly inside the arc from a to b.
inline bool segments_cross(int a, int b, int c, int d, int n) {
  if (a == c || a == d || b == c || b == d) {
    throw Error(ErrorCode::SharedEndpoint,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") vs (" + std::to_string(c) + "," +
                    std::to_string(d) + ")");
  }
  auto strictly_inside = [&](int k) { return wrap_index(k - a, n) > 0 && wrap_index(k - a, n) < wrap_index(b - a, n); };
  return strictly_inside(c) != strictly_inside(d);
}

}  // namespace bnm
