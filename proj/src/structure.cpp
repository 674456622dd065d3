#include "bnm/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bnm/circular.hpp"
#include "bnm/error.hpp"

namespace bnm {

Matching canonical(Matching m) {
  for (IndexPair& p : m.pairs) {
    if (p.a > p.b) std::swap(p.a, p.b);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

namespace {

// partner[t] for a perfect matching, or empty if it is not one.
std::vector<int> partners(const Matching& m) {
  const int n = m.n;
  if (n <= 0 || n % 2 != 0 || m.pairs.size() * 2 != static_cast<std::size_t>(n)) return {};
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (const IndexPair& p : m.pairs) {
    if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n || p.a == p.b) return {};
    auto& pa = partner[static_cast<std::size_t>(p.a)];
    auto& pb = partner[static_cast<std::size_t>(p.b)];
    if (pa != -1 || pb != -1) return {};
    pa = p.b;
    pb = p.a;
  }
  return partner;
}

// Balanced-parentheses scan: in convex position a perfect matching is
// non-crossing iff its pairs nest.
bool nests(const std::vector<int>& partner) {
  std::vector<int> open;
  for (int t = 0; t < static_cast<int>(partner.size()); ++t) {
    const int q = partner[static_cast<std::size_t>(t)];
    if (q > t) {
      open.push_back(t);
    } else {
      if (open.empty() || open.back() != q) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

}  // namespace

VerifyReport verify_matching(const ConvexPointSet& pts, const Matching& m) {
  VerifyReport report;
  const int n = pts.size();
  const std::vector<int> partner = m.n == n ? partners(m) : std::vector<int>{};
  report.perfect = !partner.empty();

  bool found = false;
  for (const IndexPair& p : m.pairs) {
    if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n) continue;
    const double d = sq_dist(pts, p.a, p.b);
    if (!found || d > report.sq_value) {
      report.sq_value = d;
      report.longest = p;
      found = true;
    }
  }
  report.value = std::sqrt(report.sq_value);

  if (report.perfect) {
    report.non_crossing = nests(partner);
  } else {
    report.non_crossing = true;
    for (std::size_t u = 0; u < m.pairs.size() && report.non_crossing; ++u) {
      for (std::size_t v = u + 1; v < m.pairs.size(); ++v) {
        const IndexPair& p = m.pairs[u];
        const IndexPair& q = m.pairs[v];
        const int ends[] = {p.a, p.b, q.a, q.b};
        if (std::any_of(std::begin(ends), std::end(ends), [n](int t) { return t < 0 || t >= n; })) continue;
        if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b || p.a == p.b || q.a == q.b) continue;
        if (segments_cross(p.a, p.b, q.a, q.b, n)) {
          report.non_crossing = false;
          break;
        }
      }
    }
  }
  return report;
}

bool is_edge(const IndexPair& p, int n) {
  const int gap = wrap_index(p.b - p.a, n);
  return gap == 1 || gap == n - 1;
}

PairClasses classify_pairs(const Matching& m) {
  PairClasses out;
  for (const IndexPair& p : m.pairs) (is_edge(p, m.n) ? out.edges : out.diagonals).push_back(p);
  return out;
}

int CascadeDecomposition::max_bounding() const {
  int best = 0;
  for (const Region& r : regions) best = std::max(best, static_cast<int>(r.bounding_diagonals.size()));
  return best;
}

CascadeDecomposition cascade_decomposition(const Matching& m) {
  const std::vector<int> partner = partners(m);
  if (partner.empty()) throw Error(ErrorCode::InvalidMatching, "not a perfect matching");
  if (!nests(partner)) throw Error(ErrorCode::InvalidMatching, "pairs cross");
  const int n = m.n;

  CascadeDecomposition out;
  std::vector<int> id_at(static_cast<std::size_t>(n), -1);  // diagonal id by its left endpoint
  std::vector<int> open;
  for (int t = 0; t < n; ++t) {
    const int q = partner[static_cast<std::size_t>(t)];
    if (is_edge({t, q}, n)) continue;
    if (q > t) {
      const int id = static_cast<int>(out.diagonals.size());
      out.diagonals.push_back({t, q});
      out.parent.push_back(open.empty() ? -1 : open.back());
      id_at[static_cast<std::size_t>(t)] = id;
      open.push_back(id);
    } else {
      open.pop_back();
    }
  }

  const std::size_t count = out.diagonals.size();
  out.regions.resize(count + 1);
  out.regions[0].owner = -1;
  out.regions[0].boundary_side_count = n;
  for (std::size_t d = 0; d < count; ++d) {
    const IndexPair& diag = out.diagonals[d];
    Region& own = out.regions[d + 1];
    own.owner = static_cast<int>(d);
    own.bounding_diagonals.push_back(diag);
    own.boundary_side_count += diag.b - diag.a;
    Region& outside = out.regions[static_cast<std::size_t>(out.parent[d] + 1)];
    outside.bounding_diagonals.push_back(diag);
    outside.boundary_side_count -= diag.b - diag.a;
  }

  std::vector<std::vector<int>> links(count);
  for (const Region& r : out.regions) {
    if (r.bounding_diagonals.size() == 3) ++out.three_bounded_count;
    if (r.bounding_diagonals.size() != 2) continue;
    const int u = id_at[static_cast<std::size_t>(r.bounding_diagonals[0].a)];
    const int v = id_at[static_cast<std::size_t>(r.bounding_diagonals[1].a)];
    links[static_cast<std::size_t>(u)].push_back(v);
    links[static_cast<std::size_t>(v)].push_back(u);
  }

  // Each diagonal borders two faces, so the link graph is a union of paths.
  std::vector<bool> seen(count, false);
  auto walk = [&](int from) {
    std::vector<IndexPair> chain;
    int prev = -1, cur = from;
    while (cur != -1) {
      seen[static_cast<std::size_t>(cur)] = true;
      chain.push_back(out.diagonals[static_cast<std::size_t>(cur)]);
      int step = -1;
      for (int nb : links[static_cast<std::size_t>(cur)]) {
        if (nb != prev) step = nb;
      }
      prev = cur;
      cur = step;
    }
    out.cascades.push_back(std::move(chain));
  };
  for (std::size_t d = 0; d < count; ++d) {
    if (!seen[d] && links[d].size() <= 1) walk(static_cast<int>(d));
  }
  for (std::size_t d = 0; d < count; ++d) {
    if (!seen[d]) throw Error(ErrorCode::Internal, "cyclic cascade");
  }
  return out;
}

}  // namespace bnm
