#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"
#include "nalg/diagram.hpp"

namespace nalg {

/// Colors aligned with Diagram::regions.
using Coloring = std::vector<Element>;

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

namespace detail {

inline bool constraint_holds(const NiebrzydowskiAlgebra& A, const Constraint& c, const Coloring& col) {
  const auto& r = c.refs;
  if (c.kind == ConstraintKind::Crossing)
    return A.tribracket()(col[r[0]], col[r[1]], col[r[2]]) == col[r[3]];
  const Element m = A.product().at(col[r[0]], col[r[2]]);
  return m != kUndefined && m == col[r[1]];
}

inline void require_mode(const NiebrzydowskiAlgebra& A, const Diagram& D) {
  if (D.kind == DiagramKind::HandlebodyLink && !A.idempotent())
    throw ModeError("diagram '" + D.name + "' is a handlebody-link; it can only be colored by an idempotent algebra");
}

inline bool cancellative(const PartialProduct& P) {
  const int n = P.size();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element b2 = b + 1; b2 <= n; ++b2) {
        if (P.at(a, b) != kUndefined && P.at(a, b) == P.at(a, b2)) return false;
        if (P.at(b, a) != kUndefined && P.at(b, a) == P.at(b2, a)) return false;
      }
  return true;
}

// Propagate-and-branch counter. Inverse propagation is only used when the
// structure actually has unique inverses, so counts stay exact even for
// unverified input.
class Solver {
 public:
  Solver(const NiebrzydowskiAlgebra& A, const Diagram& D)
      : A_(A), D_(D), n_(A.size()), invert_tri_(A.tribracket().is_latin()),
        invert_prod_(cancellative(A.product())), touching_(D.regions.size()) {
    for (std::size_t i = 0; i < D.constraints.size(); ++i)
      for (auto r : D.constraints[i].refs)
        if (touching_[r].empty() || touching_[r].back() != i) touching_[r].push_back(i);
  }

  // Counts colorings extending `fixed` (kUndefined = free). Unconstrained free
  // regions contribute a factor n without branching.
  std::uint64_t count(Coloring fixed) {
    enumerate_ = false;
    total_ = 0;
    run(std::move(fixed));
    return total_;
  }

  std::vector<Coloring> enumerate(Coloring fixed) {
    enumerate_ = true;
    found_.clear();
    total_ = 0;
    run(std::move(fixed));
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void run(Coloring fixed) {
    if (fixed.size() != D_.regions.size()) throw InvalidParameter("partial coloring has the wrong length");
    col_ = std::move(fixed);
    multiplier_ = 1;
    if (!enumerate_) {
      for (std::size_t r = 0; r < col_.size(); ++r)
        if (col_[r] == kUndefined && touching_[r].empty()) {
          multiplier_ *= static_cast<std::uint64_t>(n_);
          skip_.push_back(r);
        }
    }
    std::vector<std::size_t> trail;
    std::vector<std::size_t> queue(D_.constraints.size());
    for (std::size_t i = 0; i < queue.size(); ++i) queue[i] = i;
    if (propagate(queue, trail)) branch();
    skip_.clear();
  }

  bool assign(std::size_t r, Element v, std::vector<std::size_t>& trail, std::vector<std::size_t>& queue) {
    if (col_[r] != kUndefined) return col_[r] == v;
    col_[r] = v;
    trail.push_back(r);
    for (auto c : touching_[r]) queue.push_back(c);
    return true;
  }

  void undo(std::vector<std::size_t>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      col_[trail.back()] = kUndefined;
      trail.pop_back();
    }
  }

  bool propagate(std::vector<std::size_t>& queue, std::vector<std::size_t>& trail) {
    const Tribracket& T = A_.tribracket();
    const PartialProduct& P = A_.product();
    while (!queue.empty()) {
      const Constraint& c = D_.constraints[queue.back()];
      queue.pop_back();
      const auto& r = c.refs;
      int unknown = 0;
      std::size_t slot = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (col_[r[i]] == kUndefined) {
          ++unknown;
          slot = i;
        }
      if (unknown == 0) {
        if (!constraint_holds(A_, c, col_)) {
          queue.clear();
          return false;
        }
        continue;
      }
      // A region repeated in two open slots also lands here; branching covers it.
      if (unknown > 1) continue;
      Element v = kUndefined;
      auto at = [&](std::size_t i) { return col_[r[i]]; };
      if (c.kind == ConstraintKind::Crossing) {
        if (slot == 3)
          v = T(at(0), at(1), at(2));
        else if (!invert_tri_)
          continue;
        else if (slot == 0)
          v = T.solve(TriSlot::A, {at(1), at(2), at(3)});
        else if (slot == 1)
          v = T.solve(TriSlot::B, {at(0), at(2), at(3)});
        else
          v = T.solve(TriSlot::C, {at(0), at(1), at(3)});
      } else {
        std::optional<Element> s;
        if (slot == 1)
          s = P.solve(ProductSlot::Result, at(0), at(2));
        else if (!invert_prod_)
          continue;
        else if (slot == 0)
          s = P.solve(ProductSlot::Left, at(2), at(1));
        else
          s = P.solve(ProductSlot::Right, at(0), at(1));
        v = s.value_or(kUndefined);
      }
      if (v == kUndefined || !assign(r[slot], v, trail, queue)) {
        queue.clear();
        return false;
      }
    }
    return true;
  }

  // Most-constrained first: prefer regions sharing constraints with colored
  // regions, then higher degree, then lower index.
  std::size_t pick() const {
    std::size_t best = col_.size();
    std::pair<int, std::size_t> best_score{-1, 0};
    for (std::size_t r = 0; r < col_.size(); ++r) {
      if (col_[r] != kUndefined || std::find(skip_.begin(), skip_.end(), r) != skip_.end()) continue;
      int informed = 0;
      for (auto ci : touching_[r])
        for (auto o : D_.constraints[ci].refs)
          if (col_[o] != kUndefined) {
            ++informed;
            break;
          }
      std::pair<int, std::size_t> score{informed, touching_[r].size()};
      if (score > best_score) {
        best_score = score;
        best = r;
      }
    }
    return best;
  }

  void branch() {
    const std::size_t r = pick();
    if (r == col_.size()) {
      for (const auto& c : D_.constraints) {
        bool done = std::all_of(c.refs.begin(), c.refs.end(), [&](std::size_t i) { return col_[i] != kUndefined; });
        if (done && !constraint_holds(A_, c, col_)) return;
      }
      total_ += multiplier_;
      if (enumerate_) found_.push_back(col_);
      return;
    }
    std::vector<std::size_t> trail, queue;
    for (Element v = 1; v <= n_; ++v) {
      if (!assign(r, v, trail, queue)) continue;
      if (propagate(queue, trail)) branch();
      undo(trail, 0);
    }
  }

  const NiebrzydowskiAlgebra& A_;
  const Diagram& D_;
  int n_;
  bool invert_tri_, invert_prod_;
  std::vector<std::vector<std::size_t>> touching_;
  Coloring col_;
  std::vector<std::size_t> skip_;
  std::uint64_t multiplier_ = 1, total_ = 0;
  bool enumerate_ = false;
  std::vector<Coloring> found_;
};

}  // namespace detail

/// Number of colorings of D by A. Throws ModeError for a handlebody-link
/// diagram paired with a non-idempotent algebra.
inline std::uint64_t count_colorings(const NiebrzydowskiAlgebra& A, const Diagram& D) {
  detail::require_mode(A, D);
  return detail::Solver(A, D).count(Coloring(D.regions.size(), kUndefined));
}

/// Colorings agreeing with `fixed` wherever it is nonzero. No mode check:
/// local move fragments are not whole diagrams.
inline std::uint64_t count_extensions(const NiebrzydowskiAlgebra& A, const Diagram& D, const Coloring& fixed) {
  return detail::Solver(A, D).count(fixed);
}

/// All colorings, sorted lexicographically.
inline std::vector<Coloring> enumerate_colorings(const NiebrzydowskiAlgebra& A, const Diagram& D) {
  detail::require_mode(A, D);
  return detail::Solver(A, D).enumerate(Coloring(D.regions.size(), kUndefined));
}

/// Tries all n^|regions| assignments. Refuses with OracleCapExceeded above `cap`.
inline std::uint64_t count_colorings_bruteforce(const NiebrzydowskiAlgebra& A, const Diagram& D,
                                                std::uint64_t cap = kDefaultOracleCap) {
  detail::require_mode(A, D);
  const std::size_t R = D.regions.size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < R; ++i) {
    space *= static_cast<std::uint64_t>(A.size());
    if (space > cap)
      throw OracleCapExceeded("brute force over " + std::to_string(A.size()) + "^" + std::to_string(R) +
                              " assignments exceeds the cap of " + std::to_string(cap));
  }
  Coloring col(R, 1);
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k < space; ++k) {
    bool ok = true;
    for (const auto& c : D.constraints)
      if (!detail::constraint_holds(A, c, col)) {
        ok = false;
        break;
      }
    if (ok) ++total;
    for (std::size_t i = 0; i < R; ++i) {
      if (++col[i] <= A.size()) break;
      col[i] = 1;
    }
  }
  return total;
}

struct ObstructionRow {
  Element a, b, c;  // c = ab
  Element inner;    // [a,c,b]
  Element lhs;      // [a,[a,c,b],b]
  Element expected; // a
};

struct ObstructionReport {
  std::vector<ObstructionRow> rows;
  /// True when no row satisfies [a,[a,c,b],b] = a.
  bool obstructed = true;
};

/// Evaluates [a,[a,c,b],b] against a for every defined product ab = c, in
/// lexicographic order of (a,b).
inline ObstructionReport verify_k2_obstruction(const NiebrzydowskiAlgebra& A) {
  ObstructionReport rep;
  const Tribracket& T = A.tribracket();
  for (Element a = 1; a <= A.size(); ++a)
    for (Element b = 1; b <= A.size(); ++b) {
      const Element c = A.product().at(a, b);
      if (c == kUndefined) continue;
      const Element inner = T(a, c, b);
      ObstructionRow row{a, b, c, inner, T(a, inner, b), a};
      if (row.lhs == row.expected) rep.obstructed = false;
      rep.rows.push_back(row);
    }
  return rep;
}

}  // namespace nalg
