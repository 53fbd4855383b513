#pragma once

#include <string>
#include <vector>

#include "nalg/product.hpp"
#include "nalg/tribracket.hpp"

namespace nalg {

// Axiom ids, in the order the verifiers check them.
namespace axiom {
inline constexpr const char* kBijectiveA = "bijective-a";
inline constexpr const char* kBijectiveB = "bijective-b";
inline constexpr const char* kBijectiveC = "bijective-c";
// [a,b,[b,c,d]] = [a,[a,b,c],[[a,b,c],c,d]]
inline constexpr const char* kMixed1 = "mixed-1";
// [[a,b,c],c,d] = [[a,b,[b,c,d]],[b,c,d],d]
inline constexpr const char* kMixed2 = "mixed-2";
inline constexpr const char* kCancelLeft = "cancel-left";
inline constexpr const char* kCancelRight = "cancel-right";
// [a,ab,b] = ab
inline constexpr const char* kVertex = "vertex";
// a[a,b,c] = [a,b,bc], either side defined iff the other is
inline constexpr const char* kLeftProduct = "left-product";
// [a,b,c]c = [ab,b,c], same definedness rule
inline constexpr const char* kRightProduct = "right-product";
// [a,b,c] = [[a,b,bc],bc,c] whenever bc is defined
inline constexpr const char* kLeftRecover = "left-recover";
// [a,b,c] = [a,ab,[ab,b,c]] whenever ab is defined
inline constexpr const char* kRightRecover = "right-recover";
}  // namespace axiom

/// One failed instance. For bijectivity and cancellation the witness lists the
/// fixed values followed by the two colliding inputs, and lhs == rhs is the
/// shared output. Otherwise lhs != rhs, with kUndefined for an undefined side.
struct Violation {
  std::string axiom;
  std::vector<Element> witness;
  Element lhs = kUndefined;
  Element rhs = kUndefined;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    passed = false;
    violations.push_back(std::move(v));
  }
  void append(const AxiomReport& other) {
    for (const auto& v : other.violations) add(v);
  }
};

class NiebrzydowskiAlgebra {
 public:
  NiebrzydowskiAlgebra(Tribracket t, PartialProduct p) : tri_(std::move(t)), prod_(std::move(p)) {
    if (tri_.size() != prod_.size())
      throw ShapeError("tribracket has size " + std::to_string(tri_.size()) + " but product has size " +
                       std::to_string(prod_.size()));
    idempotent_ = compute_idempotent();
  }

  int size() const noexcept { return tri_.size(); }
  const Tribracket& tribracket() const noexcept { return tri_; }
  const PartialProduct& product() const noexcept { return prod_; }
  bool idempotent() const noexcept { return idempotent_; }

 private:
  bool compute_idempotent() const {
    const int n = size();
    for (Element a = 1; a <= n; ++a)
      for (Element b = 1; b <= n; ++b) {
        const Element v = prod_.at(a, b);
        if (a == b && v != a) return false;
        if (a != b && v != kUndefined) return false;
      }
    return true;
  }

  Tribracket tri_;
  PartialProduct prod_;
  bool idempotent_ = false;
};

/// Product defined exactly on the diagonal, with aa = a throughout.
inline bool is_idempotent(const NiebrzydowskiAlgebra& A) { return A.idempotent(); }

namespace detail {

template <class F>
void for_each_pair(int n, F&& f) {
  for (Element x = 1; x <= n; ++x)
    for (Element y = 1; y <= n; ++y) f(x, y);
}

// Scans the line through (x, y) in the free slot and reports every colliding
// pair. `eval(x, y, z)` evaluates with z in the varying slot.
template <class Eval>
void check_line(AxiomReport& r, const char* id, int n, Element x, Element y, Eval&& eval) {
  for (Element z1 = 1; z1 <= n; ++z1)
    for (Element z2 = z1 + 1; z2 <= n; ++z2) {
      const Element v = eval(x, y, z1);
      if (v == eval(x, y, z2)) r.add({id, {x, y, z1, z2}, v, v});
    }
}

}  // namespace detail

/// Checks slot bijectivity in all three positions, then both mixed
/// associativity identities, each over every witness in lexicographic order.
inline AxiomReport verify_tribracket(const Tribracket& T) {
  AxiomReport r;
  const int n = T.size();
  detail::for_each_pair(n, [&](Element b, Element c) {
    detail::check_line(r, axiom::kBijectiveA, n, b, c, [&](Element y, Element z, Element a) { return T(a, y, z); });
  });
  detail::for_each_pair(n, [&](Element a, Element c) {
    detail::check_line(r, axiom::kBijectiveB, n, a, c, [&](Element x, Element z, Element b) { return T(x, b, z); });
  });
  detail::for_each_pair(n, [&](Element a, Element b) {
    detail::check_line(r, axiom::kBijectiveC, n, a, b, [&](Element x, Element y, Element c) { return T(x, y, c); });
  });

  for (int eq = 1; eq <= 2; ++eq)
    for (Element a = 1; a <= n; ++a)
      for (Element b = 1; b <= n; ++b)
        for (Element c = 1; c <= n; ++c)
          for (Element d = 1; d <= n; ++d) {
            const Element abc = T(a, b, c);
            const Element bcd = T(b, c, d);
            Element lhs, rhs;
            if (eq == 1) {
              lhs = T(a, b, bcd);
              rhs = T(a, abc, T(abc, c, d));
            } else {
              lhs = T(abc, c, d);
              rhs = T(T(a, b, bcd), bcd, d);
            }
            if (lhs != rhs) r.add({eq == 1 ? axiom::kMixed1 : axiom::kMixed2, {a, b, c, d}, lhs, rhs});
          }
  return r;
}

/// Product axioms on top of the tribracket checks: cancellation, the vertex
/// identity and the four mixed product identities.
inline AxiomReport verify_algebra(const NiebrzydowskiAlgebra& A) {
  AxiomReport r = verify_tribracket(A.tribracket());
  const Tribracket& T = A.tribracket();
  const PartialProduct& P = A.product();
  const int n = A.size();

  // Undefined cells never collide with each other.
  auto collide = [](Element u, Element v) { return u != kUndefined && u == v; };
  detail::for_each_pair(n, [&](Element a, Element b1) {
    for (Element b2 = b1 + 1; b2 <= n; ++b2)
      if (collide(P.at(a, b1), P.at(a, b2))) r.add({axiom::kCancelLeft, {a, b1, b2}, P.at(a, b1), P.at(a, b2)});
  });
  detail::for_each_pair(n, [&](Element b, Element a1) {
    for (Element a2 = a1 + 1; a2 <= n; ++a2)
      if (collide(P.at(a1, b), P.at(a2, b))) r.add({axiom::kCancelRight, {b, a1, a2}, P.at(a1, b), P.at(a2, b)});
  });

  detail::for_each_pair(n, [&](Element a, Element b) {
    const Element ab = P.at(a, b);
    if (ab == kUndefined) return;
    const Element lhs = T(a, ab, b);
    if (lhs != ab) r.add({axiom::kVertex, {a, b}, lhs, ab});
  });

  auto triple_pass = [&](const char* id, auto&& sides) {
    for (Element a = 1; a <= n; ++a)
      for (Element b = 1; b <= n; ++b)
        for (Element c = 1; c <= n; ++c) {
          auto [check, lhs, rhs] = sides(a, b, c);
          if (check && lhs != rhs) r.add({id, {a, b, c}, lhs, rhs});
        }
  };
  struct Sides {
    bool check;
    Element lhs, rhs;
  };
  triple_pass(axiom::kLeftProduct, [&](Element a, Element b, Element c) {
    const Element bc = P.at(b, c);
    return Sides{true, P.at(a, T(a, b, c)), bc == kUndefined ? kUndefined : T(a, b, bc)};
  });
  triple_pass(axiom::kRightProduct, [&](Element a, Element b, Element c) {
    const Element ab = P.at(a, b);
    return Sides{true, P.at(T(a, b, c), c), ab == kUndefined ? kUndefined : T(ab, b, c)};
  });
  triple_pass(axiom::kLeftRecover, [&](Element a, Element b, Element c) {
    const Element bc = P.at(b, c);
    if (bc == kUndefined) return Sides{false, 0, 0};
    return Sides{true, T(a, b, c), T(T(a, b, bc), bc, c)};
  });
  triple_pass(axiom::kRightRecover, [&](Element a, Element b, Element c) {
    const Element ab = P.at(a, b);
    if (ab == kUndefined) return Sides{false, 0, 0};
    return Sides{true, T(a, b, c), T(a, ab, T(ab, b, c))};
  });
  return r;
}

}  // namespace nalg
