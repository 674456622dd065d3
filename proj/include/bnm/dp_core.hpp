#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bnm/detail/table_buffer.hpp"
#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"

namespace bnm {

// Which recurrence case produced a table entry.
enum class Choice : std::uint8_t {
  UsePair,       // (s, s+m-1) on top of the entry for <s+1, s+m-2>
  UseLeftEdge,   // (s, s+1) next to the entry for <s+2, s+m-1>
  UseRightEdge,  // (s+m-2, s+m-1) next to the entry for <s, s+m-3>
};

/// Optimal values of the restricted subproblems on every circular arc of
/// even size: a matching of the arc with at most one cascade, where the
/// chord closing the arc lies in a region bounded by at most one other
/// diagonal.
///
/// Entries are addressed by (start, size) with size even in [2, n]; size n
/// entries cover the whole polygon with the closing chord (s, s-1). Values
/// are squared lengths. Size-major storage.
class SubproblemTable {
 public:
  explicit SubproblemTable(const ConvexPointSet& pts);

  int n() const { return n_; }

  // Size 0 is the empty arc and reads as 0.
  double value(int start, int size) const {
    return size == 0 ? 0.0 : values_[slot(start, size)];
  }
  Choice choice(int start, int size) const { return static_cast<Choice>(tags_[slot(start, size)] & kChoiceMask); }
  bool necessary(int start, int size) const { return (tags_[slot(start, size)] & kNecessaryBit) != 0; }

  bool in_domain(int start, int size) const {
    return start >= 0 && start < n_ && size >= 2 && size <= n_ && size % 2 == 0;
  }

  std::size_t entry_count() const { return values_.size(); }

 private:
  std::size_t slot(int start, int size) const {
    return static_cast<std::size_t>(size / 2 - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(start);
  }

  static constexpr std::uint8_t kChoiceMask = 0x3;
  static constexpr std::uint8_t kNecessaryBit = 0x4;

  int n_;
  detail::TableBuffer<double> values_;
  detail::TableBuffer<std::uint8_t> tags_;  // Choice in the low bits, necessary flag above
};

inline SubproblemTable build_subproblem_table(const ConvexPointSet& pts) { return SubproblemTable(pts); }

struct OneCascadeOptimum {
  double sq_value;
  int best_start;
};

// Minimum over s of the full-circle entries (s, n); ties go to the smallest s.
OneCascadeOptimum one_cascade_optimum(const SubproblemTable& table);

/// Pairs matching exactly the points of <start, start+size-1>, following the
/// recorded choices. O(size). Throws BadDomain outside the table.
std::vector<IndexPair> reconstruct(const SubproblemTable& table, int start, int size);

}  // namespace bnm
