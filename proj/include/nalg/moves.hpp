#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nalg/coloring.hpp"

namespace nalg {

/// One side of a local move. The diagram's regions list the boundary first,
/// then the internal regions. `identified` pairs of boundary regions are the
/// same region on this side (two boundary arcs of one face).
struct Fragment {
  Diagram diagram;
  std::vector<std::string> internal;
  std::vector<std::pair<std::size_t, std::size_t>> identified;
};

struct LocalMovePair {
  std::string move_id;
  std::vector<std::string> boundary;
  Fragment before;
  Fragment after;
  bool requires_idempotent = false;
};

struct MoveReport {
  std::string move_id;
  bool passed = true;
  std::uint64_t boundary_colorings = 0;
  /// First failing boundary coloring, aligned with LocalMovePair::boundary.
  Coloring witness;
  std::uint64_t before_count = 0;
  std::uint64_t after_count = 0;
};

namespace detail {

// Constraint lines use "X a b c d" for [a,b,c] = d and "V l m r" for l*r = m.
inline Fragment make_fragment(const std::string& id, const std::vector<std::string>& boundary,
                              std::vector<std::string> internal, std::initializer_list<const char*> lines,
                              std::initializer_list<std::pair<const char*, const char*>> identified = {}) {
  std::string name = id;
  std::replace(name.begin(), name.end(), '.', '_');
  std::string text = "name = " + name + "\nregions:";
  for (const auto& b : boundary) text += " " + b;
  for (const auto& i : internal) text += " " + i;
  text += "\n";
  for (std::string_view l : lines) {
    const bool crossing = l.front() == 'X';
    text += (crossing ? "crossing:" : "vertex:") + std::string(l.substr(1)) + "\n";
  }
  Fragment f{parse_diagram(text, id), std::move(internal), {}};
  for (auto [x, y] : identified) f.identified.emplace_back(f.diagram.region_index(x), f.diagram.region_index(y));
  return f;
}

}  // namespace detail

/// Oriented R1 (4), R2 (4), one R3, the six generating graph moves, and IH.
inline std::vector<LocalMovePair> builtin_move_pairs() {
  using detail::make_fragment;
  std::vector<LocalMovePair> v;
  auto add = [&](std::string id, std::vector<std::string> boundary, std::vector<std::string> in_before,
                 std::initializer_list<const char*> before, std::vector<std::string> in_after,
                 std::initializer_list<const char*> after,
                 std::initializer_list<std::pair<const char*, const char*>> ident_before = {}, bool ih = false) {
    LocalMovePair p{id, boundary, make_fragment(id + "_before", boundary, std::move(in_before), before, ident_before),
                    make_fragment(id + "_after", boundary, std::move(in_after), after), ih};
    v.push_back(std::move(p));
  };

  // A kink adds one region C. Changing the crossing sign leaves the same
  // equation because the repeated boundary regions fill the same slots, so
  // R1c/R1d coincide with R1a/R1b.
  add("R1a", {"A", "B"}, {}, {}, {"C"}, {"X A B C B"});
  add("R1b", {"A", "B"}, {}, {}, {"C"}, {"X C A B A"});
  add("R1c", {"A", "B"}, {}, {}, {"C"}, {"X A B C B"});
  add("R1d", {"A", "B"}, {}, {}, {"C"}, {"X C A B A"});

  // Before the move C and Cp are one face; afterwards the bigon D separates them.
  const std::vector<std::string> r2 = {"A", "C", "E", "Cp"};
  add("R2a", r2, {}, {}, {"D"}, {"X A C E D", "X A Cp E D"}, {{"C", "Cp"}});
  add("R2b", r2, {}, {}, {"D"}, {"X A D E C", "X A D E Cp"}, {{"C", "Cp"}});
  add("R2c", r2, {}, {}, {"D"}, {"X D E C A", "X D E Cp A"}, {{"C", "Cp"}});
  add("R2d", r2, {}, {}, {"D"}, {"X D A C E", "X D A Cp E"}, {{"C", "Cp"}});

  // Regions named by their side (L/R) of the top, middle and bottom strands.
  add("R3", {"LLL", "RLL", "RRL", "RRR", "LLR", "LRR"}, {"RLR"},
      {"X LLL RLL RLR LLR", "X LLR RLR RRR LRR", "X RLL RRL RRR RLR"}, {"LRL"},
      {"X LRL RRL RRR LRR", "X LLL RLL RRL LRL", "X LLL LRL LRR LLR"});

  add("R4.1", {"a", "b", "t"}, {"m"}, {"V a m b", "X a m b t"}, {}, {"V a t b"});
  add("R4.10", {"a", "b", "t"}, {"m"}, {"V a m b", "X a t b m"}, {}, {"V a t b"});

  const std::vector<std::string> r5 = {"a", "b", "m", "a2", "b2"};
  add("R5.7", r5, {}, {"X a a2 b2 b", "V a m b"}, {"m2"}, {"V a2 m2 b2", "X a a2 m2 m", "X m m2 b2 b"});
  add("R5.10", r5, {}, {"X a b b2 a2", "V a m b"}, {"m2"}, {"V a2 m2 b2", "X a m m2 a2", "X m b b2 m2"});
  add("R5.13", r5, {}, {"X a2 a b b2", "V a m b"}, {"m2"}, {"V a2 m2 b2", "X a2 a m m2", "X m2 m b b2"});
  add("R5.16", r5, {}, {"X a2 b2 b a", "V a m b"}, {"m2"}, {"V a2 m2 b2", "X a2 m2 m a", "X m2 b2 b m"});

  add("IH", {"L", "T", "B", "R"}, {}, {"V L T B", "V T B R"}, {}, {"V L B R", "V L T R"}, {}, true);
  return v;
}

inline std::uint64_t fragment_extensions(const NiebrzydowskiAlgebra& A, const Fragment& f, const Coloring& boundary) {
  for (auto [x, y] : f.identified)
    if (boundary[x] != boundary[y]) return 0;
  Coloring fixed(f.diagram.regions.size(), kUndefined);
  std::copy(boundary.begin(), boundary.end(), fixed.begin());
  return count_extensions(A, f.diagram, fixed);
}

/// Compares extension counts of both sides for every boundary coloring, in
/// lexicographic order, stopping at the first mismatch.
inline MoveReport check_move_invariance(const NiebrzydowskiAlgebra& A, const LocalMovePair& pair) {
  MoveReport rep;
  rep.move_id = pair.move_id;
  const int n = A.size();
  Coloring col(pair.boundary.size(), 1);
  while (true) {
    ++rep.boundary_colorings;
    const auto before = fragment_extensions(A, pair.before, col);
    const auto after = fragment_extensions(A, pair.after, col);
    if (before != after) {
      rep.passed = false;
      rep.witness = col;
      rep.before_count = before;
      rep.after_count = after;
      return rep;
    }
    std::size_t i = col.size();
    while (i > 0 && col[i - 1] == n) col[--i] = 1;
    if (i == 0) break;
    ++col[i - 1];
  }
  return rep;
}

inline const LocalMovePair& find_move(const std::vector<LocalMovePair>& moves, std::string_view id) {
  for (const auto& m : moves)
    if (m.move_id == id) return m;
  throw InvalidParameter("unknown move '" + std::string(id) + "'");
}

}  // namespace nalg
