#pragma once

// Hoods of relations and the Q-set of a Nakayama algebra.
//
// The hood of a relation g is the ordered multiset of vertices along its path.
// Position 0 is the hook, position l-1 the denouement, and positions 1..l-2
// form the interior. Cyclic relations may visit a vertex several times, so
// interior membership is tracked per occurrence.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

struct Hood {
  Generator generator;
  std::vector<int> positions;
  std::map<int, std::vector<int>> interior_occurrences;

  int hook() const { return positions.front(); }
  int denouement() const { return positions.back(); }
  bool in_interior(int v) const { return interior_occurrences.contains(v); }
  bool contains(int v) const { return std::find(positions.begin(), positions.end(), v) != positions.end(); }

  std::vector<int> distinct_vertices() const {
    std::set<int> s(positions.begin(), positions.end());
    return {s.begin(), s.end()};
  }

  std::vector<int> interior_vertices() const {
    std::vector<int> out;
    for (const auto& [v, _] : interior_occurrences) out.push_back(v);
    return out;
  }
};

inline Hood hood(const NakayamaAlgebra& a, const Generator& g) {
  Hood h{g, window(g, a.n()), {}};
  for (int p = 1; p + 1 < g.length; ++p) h.interior_occurrences[h.positions[static_cast<std::size_t>(p)]].push_back(p);
  return h;
}

inline std::vector<Hood> hoods(const NakayamaAlgebra& a) {
  std::vector<Hood> out;
  for (const auto& g : a.generators()) out.push_back(hood(a, g));
  return out;
}

/// X = vertices interior to no relation, split into X0 (in no hood),
/// X1 (hook or denouement, not both) and X2 (hook and denouement).
struct QSetPartition {
  std::vector<int> x;
  std::vector<int> x0;
  std::vector<int> x1;
  std::vector<int> x2;
  std::map<int, Generator> hook_gen;
  std::map<int, Generator> den_gen;

  bool contains(int v) const { return std::binary_search(x.begin(), x.end(), v); }
  bool in_x0(int v) const { return std::binary_search(x0.begin(), x0.end(), v); }
};

inline QSetPartition q_set_partition(const NakayamaAlgebra& a) {
  QSetPartition p;
  const auto hs = hoods(a);
  for (const auto& h : hs) {
    p.hook_gen.emplace(h.hook(), h.generator);
    p.den_gen.emplace(h.denouement(), h.generator);
  }
  for (int v = 1; v <= a.n(); ++v) {
    bool interior = false;
    bool in_hood = false;
    for (const auto& h : hs) {
      interior = interior || h.in_interior(v);
      in_hood = in_hood || h.contains(v);
    }
    if (interior) continue;
    p.x.push_back(v);
    if (!in_hood) {
      p.x0.push_back(v);
    } else if (p.hook_gen.contains(v) && p.den_gen.contains(v)) {
      p.x2.push_back(v);
    } else {
      p.x1.push_back(v);
    }
  }
  return p;
}

}  // namespace nakayama
