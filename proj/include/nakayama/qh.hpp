#pragma once

// Total orderings of the simples, Weyl (standard) modules, Delta-filtrations,
// and the two q-ordering tests: the brute-force oracle that builds every Weyl
// module and checks every projective, and the hood criterion.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/hood.hpp"

namespace nakayama {

/// A total order on vertices 1..n stored as ranks; a higher rank is larger.
class TotalOrdering {
 public:
  TotalOrdering() = default;

  /// `vertices` lists every vertex once, largest first ("1,3,2" means 1 ⪰ 3 ⪰ 2).
  static TotalOrdering from_descending(std::span<const int> vertices) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> rank(vertices.size(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = vertices[static_cast<std::size_t>(i)];
      if (v < 1 || v > n || rank[static_cast<std::size_t>(v - 1)] != 0)
        throw error(errc::not_a_permutation, "ordering must list each of 1.." + std::to_string(n) + " exactly once");
      rank[static_cast<std::size_t>(v - 1)] = n - i;
    }
    return TotalOrdering(std::move(rank));
  }

  static TotalOrdering from_descending(std::initializer_list<int> vertices) {
    return from_descending(std::span<const int>(vertices.begin(), vertices.size()));
  }

  static TotalOrdering from_ranks(std::vector<int> rank) {
    std::vector<int> desc(rank.size());
    const int n = static_cast<int>(rank.size());
    std::vector<bool> used(rank.size(), false);
    for (int v = 1; v <= n; ++v) {
      const int r = rank[static_cast<std::size_t>(v - 1)];
      if (r < 1 || r > n || used[static_cast<std::size_t>(r - 1)])
        throw error(errc::not_a_permutation, "ranks must be a permutation of 1.." + std::to_string(n));
      used[static_cast<std::size_t>(r - 1)] = true;
    }
    return TotalOrdering(std::move(rank));
  }

  int n() const { return static_cast<int>(rank_.size()); }
  int rank(int v) const { return rank_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& ranks() const { return rank_; }

  /// Is u ⪯ v?
  bool below_or_equal(int u, int v) const { return rank(u) <= rank(v); }

  std::vector<int> descending() const {
    std::vector<int> out(rank_.size());
    for (int v = 1; v <= n(); ++v) out[static_cast<std::size_t>(n() - rank(v))] = v;
    return out;
  }

  int maximum() const { return descending().front(); }

  friend bool operator==(const TotalOrdering&, const TotalOrdering&) = default;

 private:
  explicit TotalOrdering(std::vector<int> rank) : rank_(std::move(rank)) {}
  std::vector<int> rank_;
};

inline std::string to_string(const TotalOrdering& ord) {
  std::string s;
  for (int v : ord.descending()) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

/// lengths[λ-1] = composition length of Δ(λ).
struct WeylFamily {
  std::vector<int> lengths;

  int length(int v) const { return lengths[static_cast<std::size_t>(v - 1)]; }

  friend auto operator<=>(const WeylFamily&, const WeylFamily&) = default;
};

/// Largest quotient of P(λ) whose composition factors are all ⪯ λ.
inline Uniserial weyl_module(const NakayamaAlgebra& a, int lambda, const TotalOrdering& ord) {
  const int cap = a.kupisch(lambda);
  int m = 1;
  while (m < cap && ord.below_or_equal(a.wrap(lambda + m), lambda)) ++m;
  return {lambda, m};
}

inline WeylFamily weyl_family(const NakayamaAlgebra& a, const TotalOrdering& ord) {
  WeylFamily f;
  f.lengths.reserve(static_cast<std::size_t>(a.n()));
  for (int v = 1; v <= a.n(); ++v) f.lengths.push_back(weyl_module(a, v, ord).len);
  return f;
}

/// Greedy Delta-filtration test. The top factor of a filtration of (t;l) must
/// be Δ(t), so peeling it off is forced and no search is needed.
inline bool is_good(const NakayamaAlgebra& a, Uniserial m, const WeylFamily& family) {
  while (!m.is_zero()) {
    const int d = family.length(m.top);
    if (d > m.len) return false;
    m = d == m.len ? Uniserial::zero() : Uniserial{a.wrap(m.top + d), m.len - d};
  }
  return true;
}

struct OracleVerdict {
  bool q_ordering = true;
  std::optional<int> non_schurian_delta;  // condition (1) failure: first such λ
  std::optional<int> non_good_projective; // condition (2) failure: first such j
  WeylFamily family;
};

/// Ground truth: every Δ(λ) Schurian and every P(j) filtered by Weyl modules.
inline OracleVerdict q_ordering_oracle(const NakayamaAlgebra& a, const TotalOrdering& ord) {
  OracleVerdict v;
  v.family = weyl_family(a, ord);
  for (int l = 1; l <= a.n(); ++l) {
    if (!is_schurian(a, {l, v.family.length(l)})) {
      v.non_schurian_delta = l;
      v.q_ordering = false;
      return v;
    }
  }
  for (int j = 1; j <= a.n(); ++j) {
    if (!is_good(a, a.projective(j), v.family)) {
      v.non_good_projective = j;
      v.q_ordering = false;
      return v;
    }
  }
  return v;
}

inline bool is_q_ordering_oracle(const NakayamaAlgebra& a, const TotalOrdering& ord) {
  return q_ordering_oracle(a, ord).q_ordering;
}

/// Vertex of largest rank among the vertices of a hood.
inline int hood_maximum(const Hood& h, const TotalOrdering& ord) {
  return *std::max_element(h.positions.begin(), h.positions.end(),
                           [&](int u, int v) { return ord.rank(u) < ord.rank(v); });
}

/// A hood passes iff its maximal vertex has no interior occurrence.
inline bool hood_passes(const Hood& h, const TotalOrdering& ord) { return !h.in_interior(hood_maximum(h, ord)); }

inline bool is_q_ordering_criterion(const NakayamaAlgebra& a, const TotalOrdering& ord) {
  for (const auto& g : a.generators())
    if (!hood_passes(hood(a, g), ord)) return false;
  return true;
}

/// Same test with precomputed hoods, for enumeration loops.
inline bool is_q_ordering_criterion(std::span<const Hood> hs, const TotalOrdering& ord) {
  return std::all_of(hs.begin(), hs.end(), [&](const Hood& h) { return hood_passes(h, ord); });
}

inline bool is_quasi_hereditary(const NakayamaAlgebra& a) { return !q_set_partition(a).x.empty(); }

/// x+1 ⪯ x+2 ⪯ ... ⪯ x, cyclically: descending list x, x-1, ..., x+1.
inline TotalOrdering canonical_q_ordering(const NakayamaAlgebra& a, int x) {
  if (!q_set_partition(a).contains(x))
    throw error(errc::not_in_q_set, "vertex " + std::to_string(x) + " is interior to a relation");
  std::vector<int> desc;
  for (int i = 0; i < a.n(); ++i) desc.push_back(a.wrap(x - i));
  return TotalOrdering::from_descending(desc);
}

namespace detail {

// Surviving path set after deleting the vertices in `removed` (bit v-1): each
// relation path splits into maximal runs of surviving vertices, and runs with
// fewer than 3 vertices are dropped. Returns whether `v` occurs strictly inside
// one of the surviving runs.
inline bool properly_internal(const std::vector<std::vector<int>>& paths, std::uint32_t removed, int v) {
  for (const auto& p : paths) {
    std::size_t i = 0;
    while (i < p.size()) {
      while (i < p.size() && (removed >> (p[i] - 1) & 1u)) ++i;
      std::size_t j = i;
      while (j < p.size() && !(removed >> (p[j] - 1) & 1u)) ++j;
      if (j - i >= 3) {
        for (std::size_t k = i + 1; k + 1 < j; ++k)
          if (p[k] == v) return true;
      }
      i = j;
    }
  }
  return false;
}

inline bool gs_search(const std::vector<std::vector<int>>& paths, int n, std::uint32_t removed,
                      std::vector<char>& dead, std::vector<int>& order) {
  if (removed == (1u << n) - 1) return true;
  if (dead[removed]) return false;
  for (int v = 1; v <= n; ++v) {
    if (removed >> (v - 1) & 1u) continue;
    if (properly_internal(paths, removed, v)) continue;
    order.push_back(v);
    if (gs_search(paths, n, removed | (1u << (v - 1)), dead, order)) return true;
    order.pop_back();
  }
  dead[removed] = 1;
  return false;
}

}  // namespace detail

/// Backtracking search for an ordering v_1..v_n of the vertices in which each
/// v_i is not properly internal to the relation paths induced on the quiver
/// with v_1..v_{i-1} deleted. Returns the first ordering found.
inline std::optional<std::vector<int>> gs_ordering(const NakayamaAlgebra& a) {
  std::vector<std::vector<int>> paths;
  for (const auto& g : a.generators()) paths.push_back(window(g, a.n()));
  std::vector<char> dead(std::size_t{1} << a.n(), 0);
  std::vector<int> order;
  if (detail::gs_search(paths, a.n(), 0, dead, order)) return order;
  return std::nullopt;
}

inline bool gs_ordering_exists(const NakayamaAlgebra& a) { return gs_ordering(a).has_value(); }

}  // namespace nakayama
