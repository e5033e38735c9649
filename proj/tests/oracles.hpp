#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the closed forms they are compared against.

#include <algorithm>
#include <set>
#include <vector>

#include "nakayama/algebra.hpp"

namespace oracle {

using nakayama::Generator;
using nakayama::QuiverKind;
using nakayama::QuiverSpec;

/// Vertex sequence of the path starting at `start` through `count` vertices.
inline std::vector<int> path(int start, int count, int n) {
  std::vector<int> out;
  int v = start;
  for (int i = 0; i < count; ++i) {
    out.push_back(v);
    v = v == n ? 1 : v + 1;
  }
  return out;
}

/// Subpath test by scanning vertex sequences. A path on these quivers is
/// determined by its vertex sequence, so contiguous-subsequence search is exact.
inline bool contains_subpath(const std::vector<int>& outer, const std::vector<int>& inner) {
  if (inner.size() > outer.size()) return false;
  return std::search(outer.begin(), outer.end(), inner.begin(), inner.end()) != outer.end();
}

inline bool path_is_zero(const std::vector<int>& p, const std::vector<Generator>& gens, int n) {
  for (const auto& g : gens)
    if (contains_subpath(p, path(g.hook, g.length, n))) return true;
  return false;
}

/// Longest nonzero path from each vertex, found by growing the path until a
/// relation appears (or the linear quiver ends).
inline std::vector<int> kupisch(const QuiverSpec& q, const std::vector<Generator>& gens) {
  std::vector<int> out;
  for (int j = 1; j <= q.n; ++j) {
    int m = 1;
    for (;;) {
      if (q.kind == QuiverKind::linear && j + m > q.n) break;
      if (path_is_zero(path(j, m + 1, q.n), gens, q.n)) break;
      ++m;
    }
    out.push_back(m);
  }
  return out;
}

/// dim End(t;l): quotients (t;i) that embed as the submodule of length i.
inline int endomorphism_dimension(int top, int len, int n) {
  int dim = 0;
  for (int i = 1; i <= len; ++i) {
    const int socle_top = (top - 1 + len - i) % n + 1;
    if (socle_top == top) ++dim;
  }
  return dim;
}

/// All minimal relation sets, by filtering every subset of candidate relations.
inline std::set<std::vector<Generator>> antichains(QuiverKind kind, int n, int max_len) {
  std::vector<Generator> cands;
  for (int h = 1; h <= n; ++h)
    for (int len = 3; len <= max_len; ++len)
      if (kind == QuiverKind::cyclic || h + len - 1 <= n) cands.push_back({h, len});
  std::set<std::vector<Generator>> out;
  const std::size_t total = std::size_t{1} << cands.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Generator> pick;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1u) pick.push_back(cands[i]);
    if (pick.empty() && kind == QuiverKind::cyclic) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pick.size() && ok; ++i)
      for (std::size_t j = 0; j < pick.size() && ok; ++j)
        if (i != j && contains_subpath(path(pick[i].hook, pick[i].length, n), path(pick[j].hook, pick[j].length, n)))
          ok = false;
    if (ok) {
      std::sort(pick.begin(), pick.end());
      out.insert(pick);
    }
  }
  return out;
}

}  // namespace oracle
