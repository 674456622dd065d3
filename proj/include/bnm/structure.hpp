#pragma once

#include <vector>

#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm {

struct VerifyReport {
  bool perfect = false;
  bool non_crossing = false;
  double sq_value = 0.0;  // squared length of the longest pair
  double value = 0.0;
  IndexPair longest{};

  bool ok() const { return perfect && non_crossing; }
};

// Never throws on a bad matching; problems are reported in the flags.
VerifyReport verify_matching(const ConvexPointSet& pts, const Matching& m);

// Edges join neighbouring polygon vertices; every other pair is a diagonal.
bool is_edge(const IndexPair& p, int n);

struct PairClasses {
  std::vector<IndexPair> edges;
  std::vector<IndexPair> diagonals;
};

PairClasses classify_pairs(const Matching& m);

// A face of the polygon cut along the matching's diagonals.
struct Region {
  int owner = -1;  // index of the diagonal enclosing the face; -1 for the outer face
  std::vector<IndexPair> bounding_diagonals;
  int boundary_side_count = 0;  // polygon sides on the face's boundary
};

struct CascadeDecomposition {
  std::vector<IndexPair> diagonals;  // normalized a < b, in order of a
  std::vector<int> parent;           // nesting forest over `diagonals`; -1 for roots
  std::vector<Region> regions;       // regions[0] is the outer face
  std::vector<std::vector<IndexPair>> cascades;
  int three_bounded_count = 0;

  int max_bounding() const;
};

/// Regions and cascades of a perfect non-crossing matching.
///
/// Non-crossing diagonals of a convex polygon form a laminar family of index
/// intervals [a, b]. Each diagonal owns the face just inside it (bounded by
/// itself and its children); the outer face, containing side (n-1, 0), is
/// bounded by the roots. Cascades are the components of diagonals linked
/// through faces bounded by exactly two diagonals, listed along the chain.
/// Throws InvalidMatching.
CascadeDecomposition cascade_decomposition(const Matching& m);

}  // namespace bnm
