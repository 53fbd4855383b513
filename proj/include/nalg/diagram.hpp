#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/algebra_io.hpp"

namespace nalg {

enum class DiagramKind { SpatialGraph, HandlebodyLink };

inline const char* to_string(DiagramKind k) {
  return k == DiagramKind::SpatialGraph ? "spatial-graph" : "handlebody-link";
}

enum class ConstraintKind { Crossing, Vertex };

/// refs index into Diagram::regions. A crossing (a,b,c,d) reads [a,b,c] = d.
/// A vertex (left, middle, right) reads left * right = middle.
struct Constraint {
  ConstraintKind kind;
  std::vector<std::size_t> refs;

  static Constraint crossing(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return {ConstraintKind::Crossing, {a, b, c, d}};
  }
  static Constraint vertex(std::size_t l, std::size_t m, std::size_t r) { return {ConstraintKind::Vertex, {l, m, r}}; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Diagram {
  std::string name = "diagram";
  DiagramKind kind = DiagramKind::SpatialGraph;
  std::vector<std::string> regions;
  std::vector<Constraint> constraints;

  std::size_t region_index(std::string_view r) const {
    auto it = std::find(regions.begin(), regions.end(), r);
    if (it == regions.end()) throw InvalidParameter("no region named '" + std::string(r) + "' in " + name);
    return static_cast<std::size_t>(it - regions.begin());
  }

  std::size_t crossings() const {
    return static_cast<std::size_t>(std::count_if(constraints.begin(), constraints.end(),
                                                  [](const Constraint& c) { return c.kind == ConstraintKind::Crossing; }));
  }
  std::size_t vertices() const { return constraints.size() - crossings(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

namespace detail {

inline bool valid_token(std::string_view t) {
  if (t.empty()) return false;
  return std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

}  // namespace detail

inline Diagram parse_diagram(std::string_view text, const std::string& source = "<input>") {
  Diagram d;
  std::map<std::string, std::size_t, std::less<>> index;
  std::size_t line_no = 0, pos = 0;
  bool saw_name = false, saw_kind = false;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::strip_comment(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty()) continue;

    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (eq != std::string_view::npos && (colon == std::string_view::npos || eq < colon)) {
      auto key = detail::trim(line.substr(0, eq));
      auto val = detail::trim(line.substr(eq + 1));
      if (key == "name") {
        if (saw_name) throw ParseError(source, line_no, "duplicate 'name'");
        if (!detail::valid_token(val)) throw ParseError(source, line_no, "bad diagram name '" + std::string(val) + "'");
        d.name = std::string(val);
        saw_name = true;
      } else if (key == "kind") {
        if (saw_kind) throw ParseError(source, line_no, "duplicate 'kind'");
        if (val == "spatial-graph")
          d.kind = DiagramKind::SpatialGraph;
        else if (val == "handlebody-link")
          d.kind = DiagramKind::HandlebodyLink;
        else
          throw ParseError(source, line_no, "unknown kind '" + std::string(val) + "'");
        saw_kind = true;
      } else {
        throw ParseError(source, line_no, "unknown key '" + std::string(key) + "'");
      }
      continue;
    }
    if (colon == std::string_view::npos) throw ParseError(source, line_no, "cannot parse '" + std::string(line) + "'");

    auto head = detail::trim(line.substr(0, colon));
    auto toks = detail::split_ws(line.substr(colon + 1));
    if (head == "regions") {
      for (auto t : toks) {
        if (!detail::valid_token(t)) throw ParseError(source, line_no, "bad region name '" + std::string(t) + "'");
        if (index.count(t)) throw ParseError(source, line_no, "duplicate region '" + std::string(t) + "'");
        index.emplace(std::string(t), d.regions.size());
        d.regions.emplace_back(t);
      }
      continue;
    }
    ConstraintKind kind;
    std::size_t arity;
    if (head == "crossing") {
      kind = ConstraintKind::Crossing;
      arity = 4;
    } else if (head == "vertex") {
      kind = ConstraintKind::Vertex;
      arity = 3;
    } else {
      throw ParseError(source, line_no, "unknown directive '" + std::string(head) + "'");
    }
    if (toks.size() != arity)
      throw ParseError(source, line_no,
                       std::string(head) + " needs " + std::to_string(arity) + " regions, got " + std::to_string(toks.size()));
    Constraint c{kind, {}};
    for (auto t : toks) {
      auto it = index.find(t);
      if (it == index.end()) throw ParseError(source, line_no, "undeclared region '" + std::string(t) + "'");
      c.refs.push_back(it->second);
    }
    d.constraints.push_back(std::move(c));
  }
  if (d.regions.empty()) throw ParseError(source, line_no, "diagram declares no regions");
  return d;
}

inline std::string format_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "name = " << d.name << "\nkind = " << to_string(d.kind) << "\nregions:";
  for (const auto& r : d.regions) os << ' ' << r;
  os << '\n';
  for (const auto& c : d.constraints) {
    os << (c.kind == ConstraintKind::Crossing ? "crossing:" : "vertex:");
    for (auto i : c.refs) os << ' ' << d.regions[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace nalg
