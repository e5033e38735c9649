#pragma once

// Line-oriented algebra files:
//
//   # comment
//   quiver = linear | cyclic
//   n = <integer>
//   relation = <hook>:<length>
//
// Unknown keys, repeated quiver/n lines and malformed integers are rejected
// with the offending line number.

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline int parse_int(std::string_view s, int line, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw parse_error(line, "malformed integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

}  // namespace detail

inline NakayamaAlgebra parse_algebra(std::string_view text) {
  std::optional<QuiverKind> kind;
  std::optional<int> n;
  struct Rel {
    Generator g;
    int line;
  };
  std::vector<Rel> rels;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw parse_error(line_no, "expected 'key = value'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));

    if (key == "quiver") {
      if (kind) throw parse_error(line_no, "duplicate quiver line");
      if (value == "linear") kind = QuiverKind::linear;
      else if (value == "cyclic") kind = QuiverKind::cyclic;
      else throw parse_error(line_no, "quiver must be 'linear' or 'cyclic', got '" + std::string(value) + "'");
    } else if (key == "n") {
      if (n) throw parse_error(line_no, "duplicate n line");
      n = detail::parse_int(value, line_no, "n");
      if (*n < 2) throw parse_error(line_no, "n must be at least 2");
    } else if (key == "relation") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos) throw parse_error(line_no, "relation must be '<hook>:<length>'");
      rels.push_back({{detail::parse_int(value.substr(0, colon), line_no, "hook"),
                       detail::parse_int(value.substr(colon + 1), line_no, "length")},
                      line_no});
    } else {
      throw parse_error(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!kind) throw parse_error(0, "missing 'quiver' line");
  if (!n) throw parse_error(0, "missing 'n' line");

  const QuiverSpec q{*kind, *n};
  std::vector<Generator> gens;
  for (const auto& r : rels) {
    try {
      check_generator(q, r.g);
    } catch (const error& e) {
      throw parse_error(r.line, e.what());
    }
    gens.push_back(r.g);
  }
  return validate_algebra(q, std::move(gens));
}

inline NakayamaAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

inline std::string format_generator(const Generator& g) {
  return std::to_string(g.hook) + ":" + std::to_string(g.length);
}

inline std::string format_algebra(const NakayamaAlgebra& a) {
  std::string out = "quiver = " + to_string(a.kind()) + "\n";
  out += "n = " + std::to_string(a.n()) + "\n";
  for (const auto& g : a.generators()) out += "relation = " + format_generator(g) + "\n";
  return out;
}

/// One-line summary such as "linear n=5 {1:3,2:3}".
inline std::string describe(const NakayamaAlgebra& a) {
  std::string s = to_string(a.kind()) + " n=" + std::to_string(a.n()) + " {";
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    if (i) s += ',';
    s += format_generator(a.generators()[i]);
  }
  return s + "}";
}

}  // namespace nakayama
