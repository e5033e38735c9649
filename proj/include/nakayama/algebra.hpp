#pragma once

// Nakayama algebras KQ_n/I with Q_n the linearly oriented A_n quiver or the
// oriented cycle on n vertices, and I generated by a minimal set of paths.
// Vertices are numbered 1..n throughout.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

enum class QuiverKind { linear, cyclic };

inline std::string to_string(QuiverKind kind) {
  return kind == QuiverKind::linear ? "linear" : "cyclic";
}

struct QuiverSpec {
  QuiverKind kind = QuiverKind::linear;
  int n = 2;

  friend auto operator<=>(const QuiverSpec&, const QuiverSpec&) = default;
};

/// Representative of `v` modulo `n` in 1..n.
constexpr int wrap(std::int64_t v, int n) {
  auto r = (v - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// Forward distance from vertex `from` to vertex `to` along the cycle, in 0..n-1.
constexpr int forward_offset(int from, int to, int n) { return wrap(to - from + 1, n) - 1; }

/// A monomial relation: the path starting at `hook` through `length` vertices.
struct Generator {
  int hook = 1;
  int length = 3;

  int denouement(int n) const { return wrap(static_cast<std::int64_t>(hook) + length - 1, n); }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Vertices visited by the generator's path, in order.
inline std::vector<int> window(const Generator& g, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.length));
  for (int i = 0; i < g.length; ++i) out.push_back(wrap(g.hook + i, n));
  return out;
}

/// True when `inner`'s path is a subpath of `outer`'s (a generator contains itself).
inline bool window_contains(const QuiverSpec& q, const Generator& outer, const Generator& inner) {
  if (inner.length > outer.length) return false;
  if (q.kind == QuiverKind::linear)
    return outer.hook <= inner.hook && inner.hook + inner.length <= outer.hook + outer.length;
  return forward_offset(outer.hook, inner.hook, q.n) <= outer.length - inner.length;
}

/// An indecomposable module (t;l): top `top`, composition length `len`.
/// The zero module is normalized to {0, 0}.
struct Uniserial {
  int top = 0;
  int len = 0;

  bool is_zero() const { return len == 0; }
  static constexpr Uniserial zero() { return {0, 0}; }

  friend auto operator<=>(const Uniserial&, const Uniserial&) = default;
};

inline std::string to_string(const Uniserial& m) {
  return "(" + std::to_string(m.top) + ";" + std::to_string(m.len) + ")";
}

/// Lengths of the indecomposable projectives P(1), ..., P(n), in that order.
/// Generators must already satisfy the range checks of validate_algebra.
inline std::vector<int> kupisch_series(const QuiverSpec& q, const std::vector<Generator>& gens) {
  const int n = q.n;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // Sentinel: longer than any admissible answer.
    std::int64_t best = q.kind == QuiverKind::linear ? n - j + 1 : INT32_MAX;
    for (const auto& g : gens) {
      if (q.kind == QuiverKind::linear && g.hook < j) continue;
      const std::int64_t reach = forward_offset(j, g.hook, n) + g.length - 1;
      best = std::min(best, reach);
    }
    out[static_cast<std::size_t>(j - 1)] = static_cast<int>(best);
  }
  return out;
}

/// Range checks for a single relation; throws on violation.
inline void check_generator(const QuiverSpec& q, const Generator& g) {
  if (g.length < 3)
    throw error(errc::length_too_short,
                "relation " + std::to_string(g.hook) + ":" + std::to_string(g.length) +
                    " has fewer than 3 vertices");
  if (g.hook < 1 || g.hook > q.n)
    throw error(errc::generator_out_of_range,
                "hook " + std::to_string(g.hook) + " is not a vertex of a quiver with " +
                    std::to_string(q.n) + " vertices");
  if (q.kind == QuiverKind::linear && g.hook + g.length - 1 > q.n)
    throw error(errc::generator_out_of_range,
                "relation " + std::to_string(g.hook) + ":" + std::to_string(g.length) +
                    " leaves the linear quiver");
}

class NakayamaAlgebra;
NakayamaAlgebra validate_algebra(const QuiverSpec& quiver, std::vector<Generator> generators);

class NakayamaAlgebra {
 public:
  const QuiverSpec& quiver() const { return quiver_; }
  QuiverKind kind() const { return quiver_.kind; }
  int n() const { return quiver_.n; }
  bool is_linear() const { return quiver_.kind == QuiverKind::linear; }
  bool is_hereditary() const { return generators_.empty(); }

  /// Generators sorted by hook.
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<int>& kupisch() const { return kupisch_; }
  int kupisch(int j) const { return kupisch_[static_cast<std::size_t>(j - 1)]; }

  int denouement(const Generator& g) const { return g.denouement(quiver_.n); }
  int wrap(std::int64_t v) const { return nakayama::wrap(v, quiver_.n); }

  Uniserial projective(int j) const { return {j, kupisch(j)}; }
  Uniserial simple(int j) const { return {j, 1}; }

  bool is_module(const Uniserial& m) const {
    return m.is_zero() || (m.top >= 1 && m.top <= n() && m.len >= 1 && m.len <= kupisch(m.top));
  }
  bool is_projective(const Uniserial& m) const { return !m.is_zero() && m.len == kupisch(m.top); }

  Uniserial radical(const Uniserial& m) const {
    if (m.is_zero()) throw error(errc::zero_module, "radical of the zero module");
    if (m.len == 1) return Uniserial::zero();
    return {wrap(m.top + 1), m.len - 1};
  }

  friend bool operator==(const NakayamaAlgebra& a, const NakayamaAlgebra& b) {
    return a.quiver_ == b.quiver_ && a.generators_ == b.generators_;
  }
  friend auto operator<=>(const NakayamaAlgebra& a, const NakayamaAlgebra& b) {
    if (auto c = a.quiver_ <=> b.quiver_; c != 0) return c;
    return a.generators_ <=> b.generators_;
  }

 private:
  friend NakayamaAlgebra validate_algebra(const QuiverSpec&, std::vector<Generator>);
  NakayamaAlgebra(QuiverSpec q, std::vector<Generator> gens)
      : quiver_(q), generators_(std::move(gens)), kupisch_(kupisch_series(quiver_, generators_)) {}

  QuiverSpec quiver_;
  std::vector<Generator> generators_;
  std::vector<int> kupisch_;
};

/// Checks the quiver and generator set and builds the algebra. Minimality
/// violations are errors; nothing is silently reduced.
inline NakayamaAlgebra validate_algebra(const QuiverSpec& quiver, std::vector<Generator> generators) {
  if (quiver.n < 2)
    throw error(errc::invalid_quiver, "a quiver needs at least 2 vertices, got " + std::to_string(quiver.n));
  if (quiver.kind == QuiverKind::cyclic && generators.empty())
    throw error(errc::empty_cyclic_ideal, "the path algebra of a cycle is infinite dimensional");
  for (const auto& g : generators) check_generator(quiver, g);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (i == j) continue;
      if (window_contains(quiver, generators[i], generators[j])) {
        const auto& a = generators[i];
        const auto& b = generators[j];
        throw error(errc::non_minimal_ideal,
                    "relation " + std::to_string(a.hook) + ":" + std::to_string(a.length) +
                        " contains relation " + std::to_string(b.hook) + ":" + std::to_string(b.length));
      }
    }
  }
  std::sort(generators.begin(), generators.end());
  return NakayamaAlgebra(quiver, std::move(generators));
}

inline NakayamaAlgebra linear_algebra(int n, std::vector<Generator> gens = {}) {
  return validate_algebra({QuiverKind::linear, n}, std::move(gens));
}

inline NakayamaAlgebra cyclic_algebra(int n, std::vector<Generator> gens) {
  return validate_algebra({QuiverKind::cyclic, n}, std::move(gens));
}

/// Index of the generator whose hook is `v`, or -1.
inline int generator_with_hook(const NakayamaAlgebra& a, int v) {
  const auto& gens = a.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].hook == v) return static_cast<int>(i);
  return -1;
}

/// Index of the generator whose denouement is `v`, or -1.
inline int generator_with_denouement(const NakayamaAlgebra& a, int v) {
  const auto& gens = a.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (a.denouement(gens[i]) == v) return static_cast<int>(i);
  return -1;
}

}  // namespace nakayama
