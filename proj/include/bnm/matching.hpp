#pragma once

#include <vector>

namespace bnm {

struct IndexPair {
  int a = 0;
  int b = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// n/2 index pairs over the points 0..n-1. Validity (perfect, non-crossing) is
// checked by verify_matching, not enforced on construction.
struct Matching {
  int n = 0;
  std::vector<IndexPair> pairs;
};

// Pairs with a < b, sorted; for comparing matchings as sets.
Matching canonical(Matching m);

}  // namespace bnm
