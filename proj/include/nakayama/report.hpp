#pragma once

// Aggregated analysis of one algebra and JSON renderings of the library's
// result types. Integers above 2^53 are rendered as decimal strings.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nakayama/algebra.hpp"
#include "nakayama/counting.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/hood.hpp"
#include "nakayama/io.hpp"
#include "nakayama/qh.hpp"
#include "nakayama/sweep.hpp"

namespace nakayama {

struct PdRow {
  int simple;
  Dimension pd;
  PdClass criterion;
};

struct AnalysisReport {
  NakayamaAlgebra algebra;
  QSetPartition partition;
  bool quasi_hereditary = false;
  std::optional<Integer> q;
  std::vector<PdRow> pd_table;
  Dimension global_dimension;
  bool s_connected = false;
  std::optional<TotalOrdering> canonical_ordering;
};

/// q is filled in from the iteration formula, which has no size limit.
inline AnalysisReport analyze(const NakayamaAlgebra& a) {
  AnalysisReport r{a, q_set_partition(a)};
  r.quasi_hereditary = !r.partition.x.empty();
  r.q = count_formula(a);
  for (int s = 1; s <= a.n(); ++s) r.pd_table.push_back({s, pd_simple(a, s), pd_simple_criterion(a, s, r.partition)});
  r.global_dimension = global_dimension(a);
  r.s_connected = s_connected(a);
  if (r.quasi_hereditary) r.canonical_ordering = canonical_q_ordering(a, r.partition.x.front());
  return r;
}

using nlohmann::json;

inline json to_json_integer(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (v >= 0 && v <= limit) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline json to_json_dimension(const Dimension& d) {
  if (d.is_finite()) return d.value;
  return to_string(d);
}

inline json to_json(const NakayamaAlgebra& a) {
  json gens = json::array();
  for (const auto& g : a.generators())
    gens.push_back({{"hook", g.hook}, {"length", g.length}, {"denouement", a.denouement(g)}});
  return {{"kind", to_string(a.kind())}, {"n", a.n()}, {"generators", gens}, {"kupisch", a.kupisch()}};
}

inline json to_json(const QSetPartition& p) {
  return {{"X", p.x}, {"X0", p.x0}, {"X1", p.x1}, {"X2", p.x2}};
}

inline json to_json(const AnalysisReport& r) {
  json pds = json::array();
  for (const auto& row : r.pd_table)
    pds.push_back({{"simple", row.simple}, {"pd", to_json_dimension(row.pd)}, {"criterion", to_string(row.criterion)}});
  json out = {{"algebra", to_json(r.algebra)},
              {"q_set", to_json(r.partition)},
              {"quasi_hereditary", r.quasi_hereditary},
              {"q", r.q ? to_json_integer(*r.q) : json(nullptr)},
              {"pd", pds},
              {"global_dimension", to_json_dimension(r.global_dimension)},
              {"s_connected", r.s_connected},
              {"canonical_ordering", r.canonical_ordering ? json(r.canonical_ordering->descending()) : json(nullptr)}};
  return out;
}

inline json to_json(const StructureClass& c) {
  json members = json::array();
  for (const auto& o : c.representatives) members.push_back(o.descending());
  return {{"delta_lengths", c.family.lengths}, {"size", c.size()}, {"orderings", members}};
}

inline json to_json(const SweepFailure& f) {
  return {{"algebra", f.algebra},
          {"check", std::string(1, f.check)},
          {"where", f.ordering ? json(*f.ordering) : json(nullptr)},
          {"expected", f.expected},
          {"got", f.got}};
}

inline json to_json(const SweepResult& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  json interpretive = json::array();
  for (const auto& f : r.interpretive) interpretive.push_back(to_json(f));
  json tallies = json::object();
  for (const auto& [c, t] : r.tallies) tallies[std::string(1, c)] = {{"checked", t.checked}, {"mismatches", t.mismatches}};
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"kind", to_string(row.kind)},
                    {"n", row.n},
                    {"generators", row.generators},
                    {"x0", row.x0},
                    {"x1", row.x1},
                    {"x2", row.x2},
                    {"quasi_hereditary", row.quasi_hereditary},
                    {"q", to_json_integer(row.q)},
                    {"ratio", row.ratio},
                    {"gld", row.gld},
                    {"checks_passed", row.checks_passed}});
  return {{"algebras_checked", r.algebras_checked},
          {"orderings_checked", r.orderings_checked},
          {"passed", r.passed()},
          {"failures", failures},
          {"interpretive", interpretive},
          {"tallies", tallies},
          {"histogram", r.histogram},
          {"algebras", rows}};
}

/// One TSV row per algebra, with a header line.
inline std::string sweep_tsv(const SweepResult& r) {
  std::string out = "kind\tn\tgenerators\tX0\tX1\tX2\tqh\tq\tq/n!\tgld\tchecks_passed\n";
  for (const auto& row : r.rows) {
    out += to_string(row.kind) + '\t' + std::to_string(row.n) + '\t' + row.generators + '\t' +
           std::to_string(row.x0) + '\t' + std::to_string(row.x1) + '\t' + std::to_string(row.x2) + '\t' +
           (row.quasi_hereditary ? "yes" : "no") + '\t' + row.q.str() + '\t' + row.ratio + '\t' + row.gld + '\t' +
           (row.checks_passed ? "yes" : "no") + '\n';
  }
  return out;
}

}  // namespace nakayama
