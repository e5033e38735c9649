#pragma once

// Command-line front end. Exit codes: 0 success, 1 semantic negative
// (not a q-ordering, sweep failures, method disagreement), 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nakayama/nakayama.hpp"
#include "nakayama/report.hpp"

namespace nakayama::cli {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "malformed " + what + " '" + text + "'");
    }
  }
  return out;
}

inline std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::string list_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Globals {
  bool json = false;
  bool quiet = false;
};

inline void print_classes(std::ostream& out, const std::vector<StructureClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    out << "class " << i + 1 << ": delta lengths (" << list_text(c.family.lengths) << "), " << c.size()
        << " ordering(s)\n";
    for (const auto& o : c.representatives) out << "  " << to_string(o) << "\n";
  }
}

inline int cmd_analyze(const Globals& g, const std::string& file, std::ostream& out) {
  const auto a = read_algebra_file(file);
  const auto r = analyze(a);
  if (g.quiet) return kOk;
  if (g.json) {
    auto doc = to_json(r);
    doc["algebra_text"] = format_algebra(a);
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "algebra: " << describe(a) << "\n";
  out << "kupisch: " << list_text(a.kupisch()) << "\n";
  out << "X = " << set_text(r.partition.x) << "  X0 = " << set_text(r.partition.x0)
      << "  X1 = " << set_text(r.partition.x1) << "  X2 = " << set_text(r.partition.x2) << "\n";
  out << "quasi-hereditary: " << (r.quasi_hereditary ? "yes" : "no") << "\n";
  if (r.q) out << "q = " << r.q->str() << "\n";
  out << "simple\tpd\tcriterion\n";
  for (const auto& row : r.pd_table)
    out << row.simple << "\t" << to_string(row.pd) << "\t" << to_string(row.criterion) << "\n";
  out << "gld = " << to_string(r.global_dimension) << "\n";
  out << "s-connected: " << (r.s_connected ? "yes" : "no") << "\n";
  if (r.canonical_ordering) out << "canonical ordering: " << to_string(*r.canonical_ordering) << "\n";
  out << "--- algebra file ---\n" << format_algebra(a);
  return kOk;
}

inline int cmd_check_order(const Globals& g, const std::string& file, const std::string& order, std::ostream& out) {
  const auto a = read_algebra_file(file);
  const auto list = parse_int_list(order, "ordering");
  if (static_cast<int>(list.size()) != a.n())
    throw error(errc::not_a_permutation, "ordering has " + std::to_string(list.size()) + " entries, algebra has " +
                                             std::to_string(a.n()) + " vertices");
  const auto ord = TotalOrdering::from_descending(list);
  const bool crit = is_q_ordering_criterion(a, ord);
  const auto verdict = q_ordering_oracle(a, ord);
  const int code = crit && verdict.q_ordering ? kOk : kNegative;
  if (g.quiet) return code;

  json hoods_json = json::array();
  std::vector<std::string> hood_lines;
  for (const auto& gen : a.generators()) {
    const auto h = hood(a, gen);
    const int m = hood_maximum(h, ord);
    const bool interior = h.in_interior(m);
    hood_lines.push_back("hood " + std::to_string(h.hook()) + ".." + std::to_string(h.denouement()) +
                         " max=" + std::to_string(m) + " interior=" + (interior ? "yes" : "no"));
    hoods_json.push_back({{"hook", h.hook()}, {"denouement", h.denouement()}, {"max", m}, {"interior", interior}});
  }
  std::string failure;
  if (verdict.non_schurian_delta) failure = "delta " + std::to_string(*verdict.non_schurian_delta) + " not schurian";
  else if (verdict.non_good_projective) failure = "P(" + std::to_string(*verdict.non_good_projective) + ") not good";

  if (g.json) {
    out << json{{"order", ord.descending()},
                {"criterion", crit},
                {"oracle", verdict.q_ordering},
                {"hoods", hoods_json},
                {"delta_lengths", verdict.family.lengths},
                {"failure", failure.empty() ? json(nullptr) : json(failure)}}
               .dump(2)
        << "\n";
    return code;
  }
  out << "criterion: " << (crit ? "yes" : "no") << "\n";
  out << "oracle: " << (verdict.q_ordering ? "yes" : "no") << "\n";
  for (const auto& l : hood_lines) out << l << "\n";
  if (!failure.empty()) out << failure << "\n";
  return code;
}

struct CountArgs {
  std::string method = "both";
  bool list = false;
  bool classes = false;
  bool oracle = false;
  bool force = false;
  int cap = 10;
};

inline int cmd_count(const Globals& g, const std::string& file, const CountArgs& args, std::ostream& out) {
  const auto a = read_algebra_file(file);
  if (args.method != "enum" && args.method != "formula" && args.method != "both")
    throw error(errc::parse_error, "method must be enum, formula or both");
  if (args.list && args.method == "formula") throw error(errc::parse_error, "--list needs enumeration");
  EnumerationOptions opt;
  opt.cap = args.cap;
  opt.force = args.force;
  opt.oracle = args.oracle;
  opt.collect = args.list;

  std::optional<EnumerationResult> en;
  std::optional<Integer> formula;
  if (args.method != "formula") en = count_enumeration(a, opt);
  if (args.method != "enum") formula = count_formula(a);
  std::vector<StructureClass> classes;
  if (args.classes) classes = classify_structures(a, opt);

  const bool agree = !(en && formula) || en->count == *formula;
  const int code = agree ? kOk : kNegative;
  if (g.quiet) return code;

  const Integer q = en ? en->count : *formula;
  if (g.json) {
    json gens = json::array();
    for (const auto& gen : a.generators()) gens.push_back({{"hook", gen.hook}, {"length", gen.length}});
    json doc = {{"n", a.n()}, {"kind", to_string(a.kind())}, {"generators", gens},
                {"q", to_json_integer(q)}, {"method", args.method}, {"classes", nullptr}};
    if (en && formula) {
      doc["q_enum"] = to_json_integer(en->count);
      doc["q_formula"] = to_json_integer(*formula);
    }
    if (args.classes) {
      doc["classes"] = json::array();
      for (const auto& c : classes) doc["classes"].push_back(to_json(c));
    }
    if (args.list) {
      doc["orderings"] = json::array();
      for (const auto& o : en->orderings) doc["orderings"].push_back(o.descending());
    }
    out << doc.dump(2) << "\n";
    return code;
  }
  out << "q = ";
  if (en) out << en->count.str() << " (enum)";
  if (en && formula) out << " = ";
  if (formula) out << formula->str() << " (formula)";
  out << "\n";
  if (!agree) out << "methods disagree\n";
  if (args.list)
    for (const auto& o : en->orderings) out << to_string(o) << "\n";
  if (args.classes) print_classes(out, classes);
  return code;
}

inline int cmd_orders(const Globals& g, const std::string& file, bool classes_only, const CountArgs& args,
                      std::ostream& out) {
  const auto a = read_algebra_file(file);
  EnumerationOptions opt;
  opt.cap = args.cap;
  opt.force = args.force;
  opt.collect = true;
  if (classes_only) {
    const auto classes = classify_structures(a, opt);
    if (g.quiet) return kOk;
    if (g.json) {
      json doc = json::array();
      for (const auto& c : classes) doc.push_back(to_json(c));
      out << json{{"classes", doc}}.dump(2) << "\n";
    } else {
      print_classes(out, classes);
    }
    return kOk;
  }
  const auto r = count_enumeration(a, opt);
  if (g.quiet) return kOk;
  if (g.json) {
    json doc = json::array();
    for (const auto& o : r.orderings) doc.push_back(o.descending());
    out << json{{"q", to_json_integer(r.count)}, {"orderings", doc}}.dump(2) << "\n";
  } else {
    for (const auto& o : r.orderings) out << to_string(o) << "\n";
  }
  return kOk;
}

inline int cmd_resolve(const Globals& g, const std::string& file, const std::string& module, std::ostream& out) {
  const auto a = read_algebra_file(file);
  const auto parts = parse_int_list(module, "module");
  if (parts.size() != 2) throw error(errc::parse_error, "module must be '<top>,<length>'");
  const Uniserial m{parts[0], parts[1]};
  if (m.is_zero() || !a.is_module(m))
    throw error(errc::parse_error, "(" + std::to_string(m.top) + ";" + std::to_string(m.len) + ") is not a nonzero module over this algebra");
  const auto res = proj_dim(a, m);
  if (g.quiet) return kOk;
  const bool cycle = res.trace.terminal == ResolutionTrace::Terminal::cycle;
  if (g.json) {
    json steps = json::array();
    for (const auto& s : res.trace.steps) steps.push_back({s.top, s.len});
    out << json{{"module", {m.top, m.len}},
                {"steps", steps},
                {"terminal", cycle ? "cycle" : "projective"},
                {"pd", to_json_dimension(res.pd)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < res.trace.steps.size(); ++i)
    out << "Ω^" << i << " = " << to_string(res.trace.steps[i]) << "\n";
  out << (cycle ? "cycle" : "projective") << "\n";
  return kOk;
}

struct SweepArgs {
  std::string kind = "both";
  int n_min = 2;
  int n_max = 4;
  std::optional<int> max_len;
  std::string checks;
  bool fail_fast = false;
  std::string tsv;
  std::string json_path;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw error(errc::parse_error, "cannot write '" + path + "'");
  f << text;
}

inline int cmd_sweep(const Globals& g, const SweepArgs& args, std::ostream& out) {
  SweepConfig cfg;
  if (args.kind == "linear") cfg.kind = SweepKind::linear;
  else if (args.kind == "cyclic") cfg.kind = SweepKind::cyclic;
  else if (args.kind == "both") cfg.kind = SweepKind::both;
  else throw error(errc::parse_error, "kind must be linear, cyclic or both");
  cfg.n_min = args.n_min;
  cfg.n_max = args.n_max;
  cfg.max_len_cyclic = args.max_len;
  cfg.fail_fast = args.fail_fast;
  if (!args.checks.empty()) {
    cfg.checks.clear();
    std::stringstream ss(args.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.size() != 1) throw error(errc::parse_error, "checks are single letters a-l, got '" + item + "'");
      cfg.checks += item;
    }
  }
  const auto r = cross_validate(cfg);
  if (!args.tsv.empty()) write_file(args.tsv, sweep_tsv(r));
  if (!args.json_path.empty()) write_file(args.json_path, to_json(r).dump(2) + "\n");
  const int code = r.passed() ? kOk : kNegative;
  if (g.quiet) return code;
  if (g.json) {
    out << to_json(r).dump(2) << "\n";
    return code;
  }
  out << "algebras checked: " << r.algebras_checked << "\n";
  out << "orderings checked: " << r.orderings_checked << "\n";
  for (const auto& [c, t] : r.tallies)
    out << "check " << c << ": " << t.checked << " checked, " << t.mismatches << " mismatches\n";
  out << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "  [" << f.check << "] expected " << f.expected << ", got " << f.got;
    if (f.ordering) out << " (" << *f.ordering << ")";
    out << "\n";
    std::stringstream ss(f.algebra);
    std::string line;
    while (std::getline(ss, line)) out << "      " << line << "\n";
  }
  out << "interpretive mismatches: " << r.interpretive.size() << "\n";
  for (const auto& f : r.interpretive) {
    std::string text = f.algebra;
    std::replace(text.begin(), text.end(), '\n', ' ');
    out << "  [" << f.check << "] expected " << f.expected << ", got " << f.got << ": " << text << "\n";
  }
  out << "q/n! histogram:";
  for (const auto& [ratio, count] : r.histogram) out << " " << ratio << "=" << count;
  out << "\n";
  return code;
}

}  // namespace detail

/// Runs the CLI on the given arguments, writing results to `out` and errors to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-hereditary orderings of Nakayama algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--quiet", g.quiet, "Suppress normal output; rely on the exit code");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Q-set, quasi-heredity, q, projective dimensions");
  analyze_cmd->add_option("file", file, "Algebra file")->required();

  std::string order;
  auto* check_cmd = app.add_subcommand("check-order", "Test one total ordering (criterion and oracle)");
  check_cmd->add_option("file", file, "Algebra file")->required();
  check_cmd->add_option("--order", order, "Descending vertex list, e.g. 1,3,2")->required();

  detail::CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count q-orderings");
  count_cmd->add_option("file", file, "Algebra file")->required();
  count_cmd->add_option("--method", count_args.method, "enum|formula|both")->capture_default_str();
  count_cmd->add_flag("--list", count_args.list, "Print q-orderings (descending lists)");
  count_cmd->add_flag("--classes", count_args.classes, "Print quasi-hereditary structure classes");
  count_cmd->add_flag("--oracle", count_args.oracle, "Re-check every ordering with the Weyl-module oracle");
  count_cmd->add_flag("--force", count_args.force, "Enumerate beyond the cap");
  count_cmd->add_option("--cap", count_args.cap, "Largest n to enumerate")->capture_default_str();

  bool classes_only = false;
  detail::CountArgs orders_args;
  auto* orders_cmd = app.add_subcommand("orders", "List q-orderings or their structure classes");
  orders_cmd->add_option("file", file, "Algebra file")->required();
  orders_cmd->add_flag("--classes", classes_only, "Group by induced Weyl modules");
  orders_cmd->add_flag("--force", orders_args.force, "Enumerate beyond the cap");
  orders_cmd->add_option("--cap", orders_args.cap, "Largest n to enumerate")->capture_default_str();

  std::string module;
  auto* resolve_cmd = app.add_subcommand("resolve", "Syzygy chain of a uniserial module");
  resolve_cmd->add_option("file", file, "Algebra file")->required();
  resolve_cmd->add_option("--module", module, "Module as <top>,<length>")->required();

  detail::SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive cross-validation over small algebras");
  sweep_cmd->add_option("--kind", sweep_args.kind, "linear|cyclic|both")->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep_args.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_args.n_max)->capture_default_str();
  sweep_cmd->add_option("--max-len", sweep_args.max_len, "Longest cyclic relation (default n+2)");
  sweep_cmd->add_option("--checks", sweep_args.checks, "Comma-separated check letters a-l (default all)");
  sweep_cmd->add_flag("--fail-fast", sweep_args.fail_fast);
  sweep_cmd->add_option("--tsv", sweep_args.tsv, "Write one row per algebra");
  sweep_cmd->add_option("--json", sweep_args.json_path, "Write the full result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze_cmd) return detail::cmd_analyze(g, file, out);
    if (*check_cmd) return detail::cmd_check_order(g, file, order, out);
    if (*count_cmd) return detail::cmd_count(g, file, count_args, out);
    if (*orders_cmd) return detail::cmd_orders(g, file, classes_only, orders_args, out);
    if (*resolve_cmd) return detail::cmd_resolve(g, file, module, out);
    if (*sweep_cmd) return detail::cmd_sweep(g, sweep_args, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace nakayama::cli
