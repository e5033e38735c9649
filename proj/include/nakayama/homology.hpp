#pragma once

// Syzygies and projective resolutions of uniserial modules, projective and
// global dimension, and the hook/denouement characterizations of simples of
// projective dimension 1 and 2.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/hood.hpp"

namespace nakayama {

/// Kernel of the projective cover P(top) -> M.
inline Uniserial syzygy(const NakayamaAlgebra& a, const Uniserial& m) {
  if (m.is_zero()) throw error(errc::zero_module, "syzygy of the zero module");
  const int rest = a.kupisch(m.top) - m.len;
  if (rest == 0) return Uniserial::zero();
  return {a.wrap(m.top + m.len), rest};
}

struct Dimension {
  enum class Kind { finite, infinite, not_applicable };

  Kind kind = Kind::finite;
  int value = 0;

  static Dimension finite(int v) { return {Kind::finite, v}; }
  static Dimension infinity() { return {Kind::infinite, 0}; }
  static Dimension not_applicable() { return {Kind::not_applicable, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }

  /// Infinity counts as at least any finite bound.
  bool at_least(int bound) const { return is_infinite() || (is_finite() && value >= bound); }

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

inline std::string to_string(const Dimension& d) {
  switch (d.kind) {
    case Dimension::Kind::finite: return std::to_string(d.value);
    case Dimension::Kind::infinite: return "inf";
    case Dimension::Kind::not_applicable: return "n/a";
  }
  return "?";
}

struct ResolutionTrace {
  enum class Terminal { projective, cycle };

  /// M, ΩM, Ω²M, ... For a cycle the last entry repeats an earlier one.
  std::vector<Uniserial> steps;
  Terminal terminal = Terminal::projective;
};

struct Resolution {
  Dimension pd;
  ResolutionTrace trace;
};

/// Follows the syzygy chain until it reaches a projective or repeats a module.
/// The chain lives in a finite set, so this always terminates.
inline Resolution proj_dim(const NakayamaAlgebra& a, const Uniserial& m) {
  Resolution r;
  if (m.is_zero()) {
    r.pd = Dimension::not_applicable();
    return r;
  }
  std::set<Uniserial> seen;
  Uniserial cur = m;
  for (;;) {
    r.trace.steps.push_back(cur);
    if (a.is_projective(cur)) {
      r.pd = Dimension::finite(static_cast<int>(r.trace.steps.size()) - 1);
      r.trace.terminal = ResolutionTrace::Terminal::projective;
      return r;
    }
    if (!seen.insert(cur).second) {
      r.pd = Dimension::infinity();
      r.trace.terminal = ResolutionTrace::Terminal::cycle;
      return r;
    }
    cur = syzygy(a, cur);
  }
}

inline Dimension pd_simple(const NakayamaAlgebra& a, int s) { return proj_dim(a, a.simple(s)).pd; }

inline Dimension global_dimension(const NakayamaAlgebra& a) {
  int best = 0;
  for (int j = 1; j <= a.n(); ++j) {
    const auto d = pd_simple(a, j);
    if (d.is_infinite()) return Dimension::infinity();
    best = std::max(best, d.value);
  }
  return Dimension::finite(best);
}

enum class PdClass { pd0, pd1, pd2, other };

inline std::string to_string(PdClass c) {
  switch (c) {
    case PdClass::pd0: return "0";
    case PdClass::pd1: return "1";
    case PdClass::pd2: return "2";
    case PdClass::other: return ">2";
  }
  return "?";
}

/// Classifies pd(s) from hooks, denouements and the Q-set alone.
inline PdClass pd_simple_criterion(const NakayamaAlgebra& a, int s, const QSetPartition& qs) {
  if (a.kupisch(s) == 1) return PdClass::pd0;
  const int gi = generator_with_hook(a, s);
  if (gi < 0) return PdClass::pd1;
  const auto& g = a.generators()[static_cast<std::size_t>(gi)];
  return qs.contains(a.denouement(g)) ? PdClass::pd2 : PdClass::other;
}

inline PdClass pd_simple_criterion(const NakayamaAlgebra& a, int s) {
  return pd_simple_criterion(a, s, q_set_partition(a));
}

/// True iff a vertex of one hood lies in the interior of a different relation.
inline bool gld_ge3_criterion(const NakayamaAlgebra& a) {
  const auto hs = hoods(a);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (i == j) continue;
      for (int v : hs[i].positions)
        if (hs[j].in_interior(v)) return true;
    }
  }
  return false;
}

/// Projective dimensions of the simples form a gap-free integer interval.
/// Any infinite dimension makes the answer false.
inline bool s_connected(const NakayamaAlgebra& a) {
  std::set<int> pds;
  for (int j = 1; j <= a.n(); ++j) {
    const auto d = pd_simple(a, j);
    if (!d.is_finite()) return false;
    pds.insert(d.value);
  }
  return *pds.rbegin() - *pds.begin() + 1 == static_cast<int>(pds.size());
}

/// End(M) = K for a uniserial M iff no composition factor repeats, i.e. len <= n.
inline bool is_schurian(const NakayamaAlgebra& a, const Uniserial& m) {
  if (m.is_zero()) throw error(errc::zero_module, "Schurian test on the zero module");
  return m.len <= a.n();
}

/// Hereditary (linear, no relations) or some simple has projective dimension 2.
inline bool pd2_or_hereditary(const NakayamaAlgebra& a) {
  if (a.is_linear() && a.is_hereditary()) return true;
  for (int j = 1; j <= a.n(); ++j)
    if (pd_simple(a, j) == Dimension::finite(2)) return true;
  return false;
}

}  // namespace nakayama
