#pragma once

// Counting q-orderings: exhaustive enumeration over all n! total orderings,
// and the Q-set iteration
//
//   (n - |X0|) q(A) = sum over x in X1 ∪ X2 of q(KQ_n / I_x̂)
//
// where I_x̂ deletes the relation(s) having x as hook or denouement.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/hood.hpp"
#include "nakayama/qh.hpp"

namespace nakayama {

using Integer = boost::multiprecision::cpp_int;

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// The path algebra of the cycle with every relation removed. It is not a
/// finite-dimensional algebra; the iteration only needs its formal count n!.
struct FreeLinear {
  int n = 2;
  friend bool operator==(const FreeLinear&, const FreeLinear&) = default;
};

using ReducedAlgebra = std::variant<NakayamaAlgebra, FreeLinear>;

inline int vertex_count(const ReducedAlgebra& r) {
  if (const auto* free = std::get_if<FreeLinear>(&r)) return free->n;
  return std::get<NakayamaAlgebra>(r).n();
}

/// I_x̂ for x in the Q-set.
inline ReducedAlgebra ideal_minus(const NakayamaAlgebra& a, int x) {
  const auto qs = q_set_partition(a);
  if (!qs.contains(x)) throw error(errc::not_in_q_set, "vertex " + std::to_string(x) + " is not in the Q-set");
  if (qs.in_x0(x)) return a;
  std::vector<Generator> keep;
  for (const auto& g : a.generators()) {
    if (g.hook == x || a.denouement(g) == x) continue;
    keep.push_back(g);
  }
  if (keep.empty() && !a.is_linear()) return FreeLinear{a.n()};
  return validate_algebra(a.quiver(), std::move(keep));
}

/// q for a principal ideal: 2 n!/l if l <= n, (n-1)! if l = n+1, 0 beyond.
inline Integer closed_form_one_generator(const QuiverSpec& q, const Generator& g) {
  const int n = q.n;
  if (g.length <= n) {
    Integer num = 2 * factorial(n);
    if (num % g.length != 0)
      throw error(errc::non_integral_division, "2*" + std::to_string(n) + "! is not divisible by " + std::to_string(g.length));
    return num / g.length;
  }
  if (g.length == n + 1) return factorial(n - 1);
  return 0;
}

namespace detail {

struct MemoKey {
  QuiverSpec quiver;
  std::vector<Generator> generators;
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

inline Integer count_formula(const NakayamaAlgebra& a, std::map<MemoKey, Integer>& memo);

inline Integer count_formula(const ReducedAlgebra& r, std::map<MemoKey, Integer>& memo) {
  if (const auto* free = std::get_if<FreeLinear>(&r)) return factorial(free->n);
  return count_formula(std::get<NakayamaAlgebra>(r), memo);
}

inline Integer count_formula(const NakayamaAlgebra& a, std::map<MemoKey, Integer>& memo) {
  const auto& gens = a.generators();
  if (gens.empty()) return factorial(a.n());
  const auto qs = q_set_partition(a);
  if (qs.x.empty()) return 0;
  if (gens.size() == 1) return closed_form_one_generator(a.quiver(), gens.front());

  MemoKey key{a.quiver(), gens};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Integer sum = 0;
  for (const auto* part : {&qs.x1, &qs.x2})
    for (int x : *part) sum += count_formula(ideal_minus(a, x), memo);
  const int divisor = a.n() - static_cast<int>(qs.x0.size());
  if (sum % divisor != 0)
    throw error(errc::non_integral_division, "iteration sum " + sum.str() + " is not divisible by " + std::to_string(divisor));
  Integer q = sum / divisor;
  memo.emplace(std::move(key), q);
  return q;
}

}  // namespace detail

/// q(A) via the Q-set iteration, exact, memoized over generator subsets.
inline Integer count_formula(const NakayamaAlgebra& a) {
  std::map<detail::MemoKey, Integer> memo;
  return detail::count_formula(a, memo);
}

inline Integer count_formula(const ReducedAlgebra& r) {
  std::map<detail::MemoKey, Integer> memo;
  return detail::count_formula(r, memo);
}

struct EnumerationOptions {
  int cap = 10;
  bool force = false;
  bool collect = false;             // keep the passing orderings
  bool oracle = false;              // recount with the oracle; mismatch throws
  std::optional<int> maximum;       // only orderings whose largest vertex is this
};

struct EnumerationResult {
  Integer count = 0;
  std::uint64_t examined = 0;
  std::vector<TotalOrdering> orderings;  // descending lists in lexicographic order
};

/// Visits every total ordering of 1..n as a descending list, in lexicographic order.
template <typename F>
void for_each_ordering(int n, F&& f) {
  std::vector<int> desc(static_cast<std::size_t>(n));
  std::iota(desc.begin(), desc.end(), 1);
  do {
    f(TotalOrdering::from_descending(desc));
  } while (std::next_permutation(desc.begin(), desc.end()));
}

inline void check_enumeration_size(int n, const EnumerationOptions& opt) {
  if (n > opt.cap && !opt.force)
    throw error(errc::too_large, std::to_string(n) + "! orderings exceed the enumeration cap n <= " + std::to_string(opt.cap));
}

inline EnumerationResult count_enumeration(const NakayamaAlgebra& a, const EnumerationOptions& opt = {}) {
  check_enumeration_size(a.n(), opt);
  const auto hs = hoods(a);
  EnumerationResult r;
  std::uint64_t passing = 0;
  for_each_ordering(a.n(), [&](const TotalOrdering& ord) {
    if (opt.maximum && ord.maximum() != *opt.maximum) return;
    ++r.examined;
    const bool ok = is_q_ordering_criterion(hs, ord);
    if (opt.oracle && ok != is_q_ordering_oracle(a, ord))
      throw error(errc::criterion_mismatch, "criterion and oracle disagree on ordering " + to_string(ord));
    if (!ok) return;
    ++passing;
    if (opt.collect) r.orderings.push_back(ord);
  });
  r.count = passing;
  return r;
}

/// Enumeration count with the same base-case conventions as count_formula.
inline Integer count_enumeration(const ReducedAlgebra& r, const EnumerationOptions& opt = {}) {
  if (const auto* free = std::get_if<FreeLinear>(&r)) return factorial(free->n);
  return count_enumeration(std::get<NakayamaAlgebra>(r), opt).count;
}

struct CountReport {
  std::optional<Integer> q_enumeration;
  Integer q_formula;
  Integer n_factorial;
  bool hereditary = false;
  bool bound_satisfied = false;   // 3q <= 2 n!
  bool equality_case = false;     // 3q == 2 n!
  bool principal_length3 = false; // exactly one relation, of 3 vertices
};

inline CountReport verify_bound(const NakayamaAlgebra& a, const EnumerationOptions& opt = {}) {
  CountReport r;
  r.q_formula = count_formula(a);
  if (a.n() <= opt.cap || opt.force) r.q_enumeration = count_enumeration(a, opt).count;
  r.n_factorial = factorial(a.n());
  r.hereditary = a.is_hereditary();
  r.bound_satisfied = 3 * r.q_formula <= 2 * r.n_factorial;
  r.equality_case = 3 * r.q_formula == 2 * r.n_factorial;
  r.principal_length3 = a.generators().size() == 1 && a.generators().front().length == 3;
  return r;
}

struct StructureClass {
  WeylFamily family;
  std::vector<TotalOrdering> representatives;
  std::size_t size() const { return representatives.size(); }
};

/// Groups q-orderings by the Weyl modules they induce, sorted by Δ-lengths.
inline std::vector<StructureClass> classify_structures(const NakayamaAlgebra& a, const EnumerationOptions& opt = {}) {
  auto opts = opt;
  opts.collect = true;
  const auto all = count_enumeration(a, opts);
  std::map<WeylFamily, std::vector<TotalOrdering>> groups;
  for (const auto& ord : all.orderings) groups[weyl_family(a, ord)].push_back(ord);
  std::vector<StructureClass> out;
  for (auto& [family, members] : groups) out.push_back({family, std::move(members)});
  return out;
}

/// I + <g>, re-minimalized: relations whose paths contain g's are dropped.
/// Throws when g is already in I.
inline NakayamaAlgebra add_generator(const NakayamaAlgebra& a, const Generator& g) {
  check_generator(a.quiver(), g);
  std::vector<Generator> gens;
  for (const auto& h : a.generators()) {
    if (window_contains(a.quiver(), g, h))
      throw error(errc::non_minimal_ideal, "relation " + std::to_string(g.hook) + ":" + std::to_string(g.length) + " already lies in the ideal");
    if (!window_contains(a.quiver(), h, g)) gens.push_back(h);
  }
  gens.push_back(g);
  return validate_algebra(a.quiver(), std::move(gens));
}

/// Relations not yet in I with at most `max_len` vertices (linear quivers are
/// also bounded by the quiver itself).
inline std::vector<Generator> addable_generators(const NakayamaAlgebra& a, int max_len) {
  std::vector<Generator> out;
  for (int h = 1; h <= a.n(); ++h) {
    for (int len = 3; len <= max_len; ++len) {
      const Generator g{h, len};
      if (a.is_linear() && h + len - 1 > a.n()) break;
      const bool in_ideal = std::any_of(a.generators().begin(), a.generators().end(),
                                        [&](const Generator& r) { return window_contains(a.quiver(), g, r); });
      if (!in_ideal) out.push_back(g);
    }
  }
  return out;
}

/// q(A) > q(A + <g>).
inline bool strict_monotonicity_check(const NakayamaAlgebra& a, const Generator& g) {
  return count_formula(a) > count_formula(add_generator(a, g));
}

}  // namespace nakayama
