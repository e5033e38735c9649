#pragma once

// Exhaustive cross-validation over every Nakayama algebra in a small range of
// vertex counts. Each check pairs a closed-form or combinatorial claim with an
// independent computation and records disagreements as data.
//
// Checks:
//   a  hood criterion agrees with the Weyl-module oracle on all n! orderings
//   b  Q-set nonempty  <=>  some ordering passes the oracle
//   c  (hereditary or some simple has pd 2)  <=>  Q-set nonempty
//   d  S-connected  <=>  Q-set nonempty (interpretive when a pd is infinite)
//   e  a vertex-deletion ordering exists  <=>  Q-set nonempty (interpretive)
//   f  iteration formula = enumeration; closed form = enumeration for one relation
//   g  3q <= 2n! with equality exactly for one relation of 3 vertices; q = n! when hereditary
//   h  adding any relation to a quasi-hereditary algebra strictly lowers q
//   i  pd classification from hooks agrees with resolutions on every simple
//   j  gld >= 3 from hoods agrees with resolutions (interpretive on cycles)
//   k  len P(top M) = len M + len ΩM on every resolution step
//   l  n * #(q-orderings with maximum x) = q(I_x̂), and 0 outside the Q-set

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/counting.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/hood.hpp"
#include "nakayama/io.hpp"
#include "nakayama/qh.hpp"

namespace nakayama {

enum class SweepKind { linear, cyclic, both };

inline const std::string& all_checks() {
  static const std::string checks = "abcdefghijkl";
  return checks;
}

struct SweepConfig {
  SweepKind kind = SweepKind::both;
  int n_min = 2;
  int n_max = 4;
  std::optional<int> max_len_cyclic;  // defaults to n+2
  std::string checks = all_checks();
  bool fail_fast = false;

  bool enabled(char c) const { return checks.find(c) != std::string::npos; }
};

struct SweepFailure {
  std::string algebra;  // algebra file text, ready to re-run
  char check = '?';
  std::optional<std::string> ordering;
  std::string expected;
  std::string got;

  friend auto operator<=>(const SweepFailure&, const SweepFailure&) = default;
};

struct AlgebraRow {
  QuiverKind kind;
  int n;
  std::string generators;
  std::size_t x0, x1, x2;
  bool quasi_hereditary;
  Integer q;
  std::string ratio;
  std::string gld;
  bool checks_passed;
};

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
};

struct SweepResult {
  std::uint64_t algebras_checked = 0;
  std::uint64_t orderings_checked = 0;
  std::vector<SweepFailure> failures;
  std::vector<SweepFailure> interpretive;
  std::map<std::string, std::uint64_t> histogram;  // reduced q/n! -> algebras
  std::map<char, CheckTally> tallies;
  std::vector<AlgebraRow> rows;

  bool passed() const { return failures.empty(); }
};

/// Every minimal relation set on the given quiver: all antichains of relation
/// paths under subpath containment. Linear quivers include the empty set;
/// cyclic quivers require at least one relation and cap lengths at `max_len`.
/// Order is deterministic (depth-first over relations sorted by hook, length).
inline void for_each_algebra(QuiverKind kind, int n, int max_len, const std::function<void(const NakayamaAlgebra&)>& f) {
  const QuiverSpec q{kind, n};
  std::vector<Generator> candidates;
  for (int h = 1; h <= n; ++h) {
    for (int len = 3; len <= (kind == QuiverKind::linear ? n - h + 1 : max_len); ++len) candidates.push_back({h, len});
  }
  std::vector<Generator> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!chosen.empty() || kind == QuiverKind::linear) f(validate_algebra(q, chosen));
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const auto& c = candidates[i];
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const Generator& g) {
        return window_contains(q, g, c) || window_contains(q, c, g);
      });
      if (comparable) continue;
      chosen.push_back(c);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::vector<NakayamaAlgebra> enumerate_algebras(QuiverKind kind, int n, int max_len) {
  std::vector<NakayamaAlgebra> out;
  for_each_algebra(kind, n, max_len, [&](const NakayamaAlgebra& a) { out.push_back(a); });
  return out;
}

inline std::string reduced_ratio(const Integer& num, const Integer& den) {
  if (num == 0) return "0";
  const Integer g = boost::multiprecision::gcd(num, den);
  const Integer p = num / g;
  const Integer r = den / g;
  return r == 1 ? p.str() : p.str() + "/" + r.str();
}

namespace detail {

class SweepRun {
 public:
  SweepRun(const SweepConfig& cfg, SweepResult& out) : cfg_(cfg), out_(out) {}

  struct Abort {};

  void algebra(const NakayamaAlgebra& a) {
    a_ = &a;
    ok_ = true;
    const int n = a.n();
    const auto qs = q_set_partition(a);
    const bool x_nonempty = !qs.x.empty();
    const auto hs = hoods(a);

    // Orderings: criterion and oracle on each of the n! total orders.
    std::uint64_t crit_count = 0;
    bool oracle_any = false;
    std::vector<std::uint64_t> by_max(static_cast<std::size_t>(n) + 1, 0);
    for_each_ordering(n, [&](const TotalOrdering& ord) {
      ++out_.orderings_checked;
      const bool crit = is_q_ordering_criterion(hs, ord);
      if (crit) {
        ++crit_count;
        ++by_max[static_cast<std::size_t>(ord.maximum())];
      }
      if (cfg_.enabled('a') || cfg_.enabled('b')) {
        const bool orc = is_q_ordering_oracle(a, ord);
        oracle_any = oracle_any || orc;
        if (cfg_.enabled('a')) expect('a', crit == orc, yes_no(orc), yes_no(crit), to_string(ord));
      }
    });
    const Integer q_enum = crit_count;

    if (cfg_.enabled('b')) expect('b', x_nonempty == oracle_any, yes_no(oracle_any), yes_no(x_nonempty));

    // Homology.
    bool any_infinite = false;
    std::vector<Dimension> pds;
    for (int s = 1; s <= n; ++s) {
      const auto res = proj_dim(a, a.simple(s));
      pds.push_back(res.pd);
      any_infinite = any_infinite || res.pd.is_infinite();
      if (cfg_.enabled('k')) {
        const auto& steps = res.trace.steps;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
          const auto& m = steps[i];
          const auto& om = steps[i + 1];
          expect('k', a.kupisch(m.top) == m.len + om.len, std::to_string(a.kupisch(m.top)),
                 std::to_string(m.len + om.len), "module " + to_string(m));
        }
      }
      if (cfg_.enabled('i')) {
        const auto cls = pd_simple_criterion(a, s, qs);
        expect('i', matches(cls, res.pd), to_string(res.pd), to_string(cls), "simple " + std::to_string(s));
      }
    }
    const auto gld = global_dimension(a);
    if (cfg_.enabled('j')) {
      const bool crit = gld_ge3_criterion(a);
      const bool actual = gld.at_least(3);
      if (a.is_linear()) expect('j', crit == actual, yes_no(actual), yes_no(crit));
      else expect_interpretive('j', crit == actual, yes_no(actual), yes_no(crit));
    }
    if (cfg_.enabled('c')) {
      const bool v = pd2_or_hereditary(a);
      expect('c', v == x_nonempty, yes_no(x_nonempty), yes_no(v));
    }
    if (cfg_.enabled('d')) {
      const bool v = s_connected(a);
      if (any_infinite) expect_interpretive('d', v == x_nonempty, yes_no(x_nonempty), yes_no(v));
      else expect('d', v == x_nonempty, yes_no(x_nonempty), yes_no(v));
    }
    if (cfg_.enabled('e')) {
      const bool v = gs_ordering_exists(a);
      expect_interpretive('e', v == x_nonempty, yes_no(x_nonempty), yes_no(v));
    }

    // Counting.
    const Integer nf = factorial(n);
    Integer q_formula = 0;
    if (cfg_.enabled('f') || cfg_.enabled('g') || cfg_.enabled('h')) q_formula = count_formula(a);
    if (cfg_.enabled('f')) {
      expect('f', q_formula == q_enum, q_enum.str(), q_formula.str(), std::string("formula"));
      if (a.generators().size() == 1) {
        const auto closed = closed_form_one_generator(a.quiver(), a.generators().front());
        expect('f', closed == q_enum, q_enum.str(), closed.str(), std::string("closed form"));
      }
    }
    if (cfg_.enabled('g')) {
      if (a.is_hereditary()) {
        expect('g', q_enum == nf, nf.str(), q_enum.str(), std::string("hereditary"));
      } else {
        const bool principal3 = a.generators().size() == 1 && a.generators().front().length == 3;
        expect('g', 3 * q_enum <= 2 * nf, "3q <= 2n!", "3q = " + Integer(3 * q_enum).str());
        expect('g', (3 * q_enum == 2 * nf) == principal3, yes_no(principal3), yes_no(3 * q_enum == 2 * nf),
               std::string("equality case"));
      }
    }
    if (cfg_.enabled('h') && x_nonempty) {
      const int max_len = a.is_linear() ? n : cfg_.max_len_cyclic.value_or(n + 2);
      for (const auto& g : addable_generators(a, max_len)) {
        const auto bigger = count_formula(add_generator(a, g));
        expect('h', q_enum > bigger, "q > " + bigger.str(), "q = " + q_enum.str(),
               "add " + format_generator(g));
      }
    }
    if (cfg_.enabled('l')) {
      for (int x = 1; x <= n; ++x) {
        const Integer lhs = Integer(n) * by_max[static_cast<std::size_t>(x)];
        const Integer rhs = qs.contains(x) ? count_enumeration(ideal_minus(a, x)) : Integer(0);
        expect('l', lhs == rhs, rhs.str(), lhs.str(), "max " + std::to_string(x));
      }
    }

    ++out_.algebras_checked;
    out_.histogram[reduced_ratio(q_enum, nf)]++;
    out_.rows.push_back({a.kind(), n, generators_text(a), qs.x0.size(), qs.x1.size(), qs.x2.size(), x_nonempty,
                         q_enum, reduced_ratio(q_enum, nf), to_string(gld), ok_});
  }

 private:
  static std::string yes_no(bool b) { return b ? "yes" : "no"; }

  static bool matches(PdClass c, const Dimension& d) {
    switch (c) {
      case PdClass::pd0: return d == Dimension::finite(0);
      case PdClass::pd1: return d == Dimension::finite(1);
      case PdClass::pd2: return d == Dimension::finite(2);
      case PdClass::other: return d.at_least(3);
    }
    return false;
  }

  static std::string generators_text(const NakayamaAlgebra& a) {
    std::string s;
    for (const auto& g : a.generators()) {
      if (!s.empty()) s += ',';
      s += format_generator(g);
    }
    return s.empty() ? "-" : s;
  }

  void expect(char check, bool ok, std::string expected, std::string got,
              std::optional<std::string> where = std::nullopt) {
    auto& t = out_.tallies[check];
    ++t.checked;
    if (ok) return;
    ++t.mismatches;
    ok_ = false;
    out_.failures.push_back({format_algebra(*a_), check, std::move(where), std::move(expected), std::move(got)});
    if (cfg_.fail_fast) throw Abort{};
  }

  void expect_interpretive(char check, bool ok, std::string expected, std::string got) {
    auto& t = out_.tallies[check];
    ++t.checked;
    if (ok) return;
    ++t.mismatches;
    out_.interpretive.push_back({format_algebra(*a_), check, std::nullopt, std::move(expected), std::move(got)});
  }

  const SweepConfig& cfg_;
  SweepResult& out_;
  const NakayamaAlgebra* a_ = nullptr;
  bool ok_ = true;
};

}  // namespace detail

inline SweepResult cross_validate(const SweepConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_max > 8 || cfg.n_min > cfg.n_max)
    throw error(errc::too_large, "sweep range must lie within 2..8");
  for (char c : cfg.checks)
    if (all_checks().find(c) == std::string::npos)
      throw error(errc::parse_error, std::string("unknown check '") + c + "'");

  SweepResult out;
  detail::SweepRun run(cfg, out);
  std::vector<QuiverKind> kinds;
  if (cfg.kind != SweepKind::cyclic) kinds.push_back(QuiverKind::linear);
  if (cfg.kind != SweepKind::linear) kinds.push_back(QuiverKind::cyclic);
  try {
    for (auto kind : kinds) {
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const int max_len = kind == QuiverKind::linear ? n : cfg.max_len_cyclic.value_or(n + 2);
        for_each_algebra(kind, n, max_len, [&](const NakayamaAlgebra& a) { run.algebra(a); });
      }
    }
  } catch (const detail::SweepRun::Abort&) {
  }
  return out;
}

}  // namespace nakayama
