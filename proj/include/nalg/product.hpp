#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nalg/core.hpp"

namespace nalg {

enum class ProductSlot { Left, Right, Result };

/// Partially defined binary operation on {1..n}. Cell (a,b) holds ab or
/// kUndefined.
class PartialProduct {
 public:
  PartialProduct(int n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
    if (n_ < 1) throw ShapeError("product size must be positive");
    if (table_.size() != detail::ipow(n_, 2))
      throw ShapeError("product table needs " + std::to_string(detail::ipow(n_, 2)) +
                       " entries, got " + std::to_string(table_.size()));
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] < kUndefined || table_[i] > n_)
        throw ShapeError("product entry " + std::to_string(table_[i]) + " at flat index " +
                         std::to_string(i) + " outside 0.." + std::to_string(n_));
    }
    build_inverses();
  }

  static PartialProduct empty(int n) { return PartialProduct(n, std::vector<Element>(detail::ipow(n, 2), kUndefined)); }

  static PartialProduct diagonal(int n) {
    std::vector<Element> t(detail::ipow(n, 2), kUndefined);
    for (int a = 1; a <= n; ++a) t[static_cast<std::size_t>(a - 1) * n + (a - 1)] = a;
    return PartialProduct(n, std::move(t));
  }

  int size() const noexcept { return n_; }

  /// Raw cell value, kUndefined when ab is not defined.
  Element at(Element a, Element b) const noexcept { return table_[index(a, b)]; }

  std::optional<Element> operator()(Element a, Element b) const noexcept {
    const Element v = at(a, b);
    if (v == kUndefined) return std::nullopt;
    return v;
  }

  bool defined(Element a, Element b) const noexcept { return at(a, b) != kUndefined; }

  const std::vector<Element>& table() const noexcept { return table_; }

  /// Left: known = (b, ab) and returns a. Right: known = (a, ab), returns b.
  /// Result: known = (a, b). When cancellation fails the first match in
  /// scan order is returned.
  std::optional<Element> solve(ProductSlot slot, Element x, Element y) const noexcept {
    Element v = kUndefined;
    switch (slot) {
      case ProductSlot::Result: v = at(x, y); break;
      case ProductSlot::Left: v = left_inv_[index(x, y)]; break;
      case ProductSlot::Right: v = right_inv_[index(x, y)]; break;
    }
    if (v == kUndefined) return std::nullopt;
    return v;
  }

  friend bool operator==(const PartialProduct& l, const PartialProduct& r) {
    return l.n_ == r.n_ && l.table_ == r.table_;
  }
  friend auto operator<=>(const PartialProduct& l, const PartialProduct& r) {
    if (auto c = l.n_ <=> r.n_; c != 0) return c;
    return l.table_ <=> r.table_;
  }

 private:
  std::size_t index(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
  }

  void build_inverses() {
    left_inv_.assign(table_.size(), kUndefined);
    right_inv_.assign(table_.size(), kUndefined);
    for (Element a = 1; a <= n_; ++a)
      for (Element b = 1; b <= n_; ++b) {
        const Element v = at(a, b);
        if (v == kUndefined) continue;
        if (left_inv_[index(b, v)] == kUndefined) left_inv_[index(b, v)] = a;
        if (right_inv_[index(a, v)] == kUndefined) right_inv_[index(a, v)] = b;
      }
  }

  int n_;
  std::vector<Element> table_;
  // left_inv_[(b, v)] = a with ab = v; right_inv_[(a, v)] = b with ab = v.
  std::vector<Element> left_inv_, right_inv_;
};

}  // namespace nalg
