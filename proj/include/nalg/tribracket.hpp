#pragma once

#include <array>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nalg/core.hpp"

namespace nalg {

/// Which position of `[a,b,c] = d` is unknown when solving.
enum class TriSlot { A, B, C, Result };

/// Finite ternary operation [a,b,c] on {1..n}, stored as an n x n x n tensor.
///
/// Layout follows the usual operation-table convention: matrix a, row b,
/// column c. Construction only checks the shape; the axioms are checked by
/// `verify_tribracket`.
class Tribracket {
 public:
  Tribracket(int n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
    if (n_ < 1) throw ShapeError("tribracket size must be positive");
    if (table_.size() != detail::ipow(n_, 3))
      throw ShapeError("tribracket table needs " + std::to_string(detail::ipow(n_, 3)) +
                       " entries, got " + std::to_string(table_.size()));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] < 1 || table_[i] > n_)
        throw ShapeError("tribracket entry " + std::to_string(table_[i]) + " at flat index " +
                         std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    build_inverses();
  }

  int size() const noexcept { return n_; }

  Element operator()(Element a, Element b, Element c) const noexcept {
    return table_[index(a, b, c)];
  }

  std::span<const Element> table() const noexcept { return table_; }

  /// True when every line of the tensor is a permutation (slot-invertible).
  bool is_latin() const noexcept { return latin_; }

  /// Completes `[a,b,c] = d` in the unknown slot. `known` lists the other
  /// three values in their natural order, e.g. (a, c, d) for slot B.
  /// Requires a latin tensor; returns kUndefined when no completion exists.
  Element solve(TriSlot slot, std::array<Element, 3> known) const noexcept {
    const auto [x, y, z] = known;
    switch (slot) {
      case TriSlot::Result: return (*this)(x, y, z);
      case TriSlot::A: return inv_a_[index(x, y, z)];
      case TriSlot::B: return inv_b_[index(x, y, z)];
      case TriSlot::C: return inv_c_[index(x, y, z)];
    }
    return kUndefined;
  }

  friend bool operator==(const Tribracket&, const Tribracket&) = default;
  friend auto operator<=>(const Tribracket& l, const Tribracket& r) {
    if (auto c = l.n_ <=> r.n_; c != 0) return c;
    return l.table_ <=> r.table_;
  }

 private:
  std::size_t index(Element a, Element b, Element c) const noexcept {
    return (static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1);
  }

  // inv_a_[(b,c,d)], inv_b_[(a,c,d)], inv_c_[(a,b,d)]; first match wins.
  void build_inverses() {
    const std::size_t cells = table_.size();
    inv_a_.assign(cells, kUndefined);
    inv_b_.assign(cells, kUndefined);
    inv_c_.assign(cells, kUndefined);
    latin_ = true;
    for (Element a = 1; a <= n_; ++a)
      for (Element b = 1; b <= n_; ++b)
        for (Element c = 1; c <= n_; ++c) {
          const Element d = (*this)(a, b, c);
          auto claim = [&](std::vector<Element>& inv, std::size_t at, Element v) {
            if (inv[at] == kUndefined)
              inv[at] = v;
            else
              latin_ = false;
          };
          claim(inv_a_, index(b, c, d), a);
          claim(inv_b_, index(a, c, d), b);
          claim(inv_c_, index(a, b, d), c);
        }
  }

  int n_;
  std::vector<Element> table_;
  std::vector<Element> inv_a_, inv_b_, inv_c_;
  bool latin_ = false;
};

/// The Alexander tribracket [a,b,c] = xa - xyb + yc over Z/n.
///
/// Residues are reported as labels 1..n with residue 0 written as n.
/// Throws InvalidParameter unless x and y are units mod n.
inline Tribracket alexander_tribracket(int n, long x, long y) {
  if (n < 1) throw InvalidParameter("alexander_tribracket: n must be positive");
  auto unit = [n](long v) { return std::gcd(((v % n) + n) % n, static_cast<long>(n)) == 1; };
  if (n > 1 && (!unit(x) || !unit(y)))
    throw InvalidParameter("alexander_tribracket: x=" + std::to_string(x) + ", y=" +
                           std::to_string(y) + " are not both units mod " + std::to_string(n));
  std::vector<Element> table;
  table.reserve(detail::ipow(n, 3));
  for (long a = 1; a <= n; ++a)
    for (long b = 1; b <= n; ++b)
      for (long c = 1; c <= n; ++c) {
        long r = (x * a - x * y * b + y * c) % n;
        if (r < 0) r += n;
        table.push_back(r == 0 ? n : static_cast<Element>(r));
      }
  return Tribracket(n, std::move(table));
}

}  // namespace nalg
