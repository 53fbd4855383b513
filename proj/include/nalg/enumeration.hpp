#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

/// Caps a search. `max_candidates` counts complete tables handed to the final
/// verifier; the timeout is checked at the same points.
struct EnumerationBudget {
  std::uint64_t max_candidates = UINT64_MAX;
  std::optional<double> timeout_seconds;
};

template <class T>
struct EnumerationResult {
  std::vector<T> items;
  bool complete = true;
  std::uint64_t candidates = 0;
};

namespace detail {

class BudgetClock {
 public:
  explicit BudgetClock(const EnumerationBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Returns false once the budget is spent; the caller stops searching.
  bool charge(std::uint64_t& used) {
    if (used >= budget_.max_candidates) return false;
    ++used;
    if (budget_.timeout_seconds && (used & 0xff) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > *budget_.timeout_seconds) return false;
    }
    return true;
  }

 private:
  EnumerationBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

// Mixed associativity checks only; bijectivity is guaranteed by construction.
inline bool mixed_identities_hold(const Tribracket& T) {
  const int n = T.size();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element c = 1; c <= n; ++c) {
        const Element abc = T(a, b, c);
        for (Element d = 1; d <= n; ++d) {
          const Element bcd = T(b, c, d);
          if (T(a, b, bcd) != T(a, abc, T(abc, c, d))) return false;
          if (T(abc, c, d) != T(T(a, b, bcd), bcd, d)) return false;
        }
      }
  return true;
}

// The product-only part of verify_algebra, short-circuiting on first failure.
// Cancellation and the vertex identity are enforced during the search.
inline bool product_identities_hold(const Tribracket& T, const PartialProduct& P) {
  const int n = T.size();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b) {
      const Element ab = P.at(a, b);
      for (Element c = 1; c <= n; ++c) {
        const Element abc = T(a, b, c);
        const Element bc = P.at(b, c);
        const Element lp = P.at(a, abc);
        if (lp != (bc == kUndefined ? kUndefined : T(a, b, bc))) return false;
        const Element rp = P.at(abc, c);
        if (rp != (ab == kUndefined ? kUndefined : T(ab, b, c))) return false;
        if (bc != kUndefined && abc != T(T(a, b, bc), bc, c)) return false;
        if (ab != kUndefined && abc != T(a, ab, T(ab, b, c))) return false;
      }
    }
  return true;
}

}  // namespace detail

/// Every tribracket on {1..n} in lexicographic order of the flat tensor.
/// Entries are filled one at a time keeping each line of the cube a partial
/// permutation; complete cubes are then tested against the mixed identities.
inline EnumerationResult<Tribracket> enumerate_tribrackets(int n, const EnumerationBudget& budget = {}) {
  if (n < 1) throw InvalidParameter("enumerate_tribrackets: n must be positive");
  EnumerationResult<Tribracket> res;
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<Element> cube(N * N * N, kUndefined);
  // used_x[line * (n+1) + v]: value v already present on that line.
  std::vector<char> used_a(N * N * (N + 1)), used_b(N * N * (N + 1)), used_c(N * N * (N + 1));
  detail::BudgetClock clock(budget);
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (stop) return;
    if (cell == cube.size()) {
      if (!clock.charge(res.candidates)) {
        stop = true;
        res.complete = false;
        return;
      }
      Tribracket T(n, cube);
      if (detail::mixed_identities_hold(T)) res.items.push_back(std::move(T));
      return;
    }
    const std::size_t a = cell / (N * N), b = (cell / N) % N, c = cell % N;
    const std::size_t la = (b * N + c) * (N + 1), lb = (a * N + c) * (N + 1), lc = (a * N + b) * (N + 1);
    for (Element v = 1; v <= n && !stop; ++v) {
      if (used_a[la + v] || used_b[lb + v] || used_c[lc + v]) continue;
      used_a[la + v] = used_b[lb + v] = used_c[lc + v] = 1;
      cube[cell] = v;
      self(self, cell + 1);
      used_a[la + v] = used_b[lb + v] = used_c[lc + v] = 0;
    }
    cube[cell] = kUndefined;
  };
  rec(rec, 0);
  return res;
}

/// Every partial product P with (T, P) an algebra, sorted with undefined
/// before 1 and tables compared row-major. The empty product is included.
inline EnumerationResult<PartialProduct> enumerate_products(const Tribracket& T, const EnumerationBudget& budget = {}) {
  EnumerationResult<PartialProduct> res;
  const int n = T.size();
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<Element> table(N * N, kUndefined);
  std::vector<char> row_used(N * (N + 1)), col_used(N * (N + 1));
  // Values v allowed in cell (a,b) by the vertex identity [a,v,b] = v.
  std::vector<std::vector<Element>> options(N * N);
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element v = 1; v <= n; ++v)
        if (T(a, v, b) == v) options[(a - 1) * N + (b - 1)].push_back(v);

  detail::BudgetClock clock(budget);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (stop) return;
    if (cell == table.size()) {
      if (!clock.charge(res.candidates)) {
        stop = true;
        res.complete = false;
        return;
      }
      PartialProduct P(n, table);
      if (detail::product_identities_hold(T, P)) res.items.push_back(std::move(P));
      return;
    }
    const std::size_t a = cell / N, b = cell % N;
    table[cell] = kUndefined;
    self(self, cell + 1);
    for (Element v : options[cell]) {
      if (stop) break;
      if (row_used[a * (N + 1) + v] || col_used[b * (N + 1) + v]) continue;
      row_used[a * (N + 1) + v] = col_used[b * (N + 1) + v] = 1;
      table[cell] = v;
      self(self, cell + 1);
      row_used[a * (N + 1) + v] = col_used[b * (N + 1) + v] = 0;
    }
    table[cell] = kUndefined;
  };
  rec(rec, 0);
  return res;
}

/// The idempotent members of enumerate_products. Only the diagonal product
/// can qualify, so this checks that one table directly.
inline std::vector<PartialProduct> enumerate_idempotent_products(const Tribracket& T) {
  PartialProduct d = PartialProduct::diagonal(T.size());
  std::vector<PartialProduct> out;
  if (verify_algebra(NiebrzydowskiAlgebra(T, d)).passed) out.push_back(std::move(d));
  return out;
}

}  // namespace nalg
