#include <gtest/gtest.h>

#include "oracle.hpp"
#include "reference_tables.hpp"

using namespace nalg;

namespace {

const std::vector<LocalMovePair>& moves() {
  static const auto m = builtin_move_pairs();
  return m;
}

bool passes_graph_moves(const NiebrzydowskiAlgebra& A) {
  for (const auto& m : moves())
    if (!m.requires_idempotent && !check_move_invariance(A, m).passed) return false;
  return true;
}

// Reference extension count: enumerate the internal regions directly.
std::uint64_t naive_extensions(const NiebrzydowskiAlgebra& A, const Fragment& f, const Coloring& boundary) {
  for (auto [x, y] : f.identified)
    if (boundary[x] != boundary[y]) return 0;
  Diagram d = f.diagram;
  std::uint64_t total = 0;
  const std::size_t k = f.internal.size();
  std::vector<int> inner(k, 1);
  for (;;) {
    Coloring col = boundary;
    col.insert(col.end(), inner.begin(), inner.end());
    bool ok = true;
    for (const auto& c : d.constraints) {
      const auto& r = c.refs;
      if (c.kind == ConstraintKind::Crossing)
        ok = oracle::br(A.tribracket(), col[r[0]], col[r[1]], col[r[2]]) == col[r[3]];
      else
        ok = oracle::pr(A.product(), col[r[0]], col[r[2]]) != 0 && oracle::pr(A.product(), col[r[0]], col[r[2]]) == col[r[1]];
      if (!ok) break;
    }
    total += ok;
    std::size_t i = 0;
    while (i < k && inner[i] == A.size()) inner[i++] = 1;
    if (i == k) break;
    ++inner[i];
  }
  return total;
}

}  // namespace

TEST(MovePairs, Inventory) {
  std::vector<std::string> ids;
  for (const auto& m : moves()) ids.push_back(m.move_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"R1a", "R1b", "R1c", "R1d", "R2a", "R2b", "R2c", "R2d", "R3", "R4.1",
                                           "R4.10", "R5.7", "R5.10", "R5.13", "R5.16", "IH"}));
  for (const auto& m : moves()) {
    EXPECT_EQ(m.requires_idempotent, m.move_id == "IH");
    for (const auto* f : {&m.before, &m.after}) {
      ASSERT_GE(f->diagram.regions.size(), m.boundary.size());
      EXPECT_TRUE(std::equal(m.boundary.begin(), m.boundary.end(), f->diagram.regions.begin()));
      for (const auto& in : f->internal)
        EXPECT_EQ(std::find(m.boundary.begin(), m.boundary.end(), in), m.boundary.end());
    }
  }
  EXPECT_THROW(find_move(moves(), "R9"), InvalidParameter);
}

TEST(MovePairs, ExtensionCountsMatchDirectEnumeration) {
  const auto A = builtin_algebra("full");
  for (const auto& m : moves()) {
    Coloring b(m.boundary.size(), 1);
    for (int step = 0; step < 40; ++step) {
      for (const auto* f : {&m.before, &m.after})
        EXPECT_EQ(fragment_extensions(A, *f, b), naive_extensions(A, *f, b)) << m.move_id;
      for (std::size_t i = 0; i < b.size(); ++i) b[i] = 1 + (b[i] + static_cast<int>(i) + step) % 3;
    }
  }
}

TEST(MoveInvariance, BundledAlgebrasPassEveryGraphMove) {
  std::vector<NiebrzydowskiAlgebra> algebras;
  for (const auto& t : corpus::algebra_texts()) algebras.push_back(builtin_algebra(t.name));
  for (const auto& p : reference::z3_products()) algebras.emplace_back(reference::z3_tribracket(), p);
  for (const auto& A : algebras)
    for (const auto& m : moves()) {
      if (m.requires_idempotent) continue;
      const auto r = check_move_invariance(A, m);
      EXPECT_TRUE(r.passed) << m.move_id << " at " << format_witness(r.witness) << "\n" << format_algebra(A);
      EXPECT_EQ(r.boundary_colorings, detail::ipow(A.size(), m.boundary.size()));
    }
}

TEST(MoveInvariance, DiagonalPassesIH) {
  const auto r = check_move_invariance(builtin_algebra("diag"), find_move(moves(), "IH"));
  EXPECT_TRUE(r.passed);
}

TEST(MoveInvariance, FullProductFailsIHWithWitness) {
  const auto A = builtin_algebra("full");
  const auto& ih = find_move(moves(), "IH");
  const auto r = check_move_invariance(A, ih);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (Coloring{1, 2, 2, 3}));
  EXPECT_EQ(r.before_count, 0u);
  EXPECT_EQ(r.after_count, 1u);
  EXPECT_EQ(fragment_extensions(A, ih.before, r.witness), naive_extensions(A, ih.before, r.witness));
  EXPECT_EQ(fragment_extensions(A, ih.after, r.witness), naive_extensions(A, ih.after, r.witness));
}

// IH holds exactly for the idempotent product, apart from the empty product,
// which defines no vertex colorings on either side.
TEST(MoveInvariance, IHSeparatesIdempotentProducts) {
  const auto T = reference::z3_tribracket();
  const auto& ih = find_move(moves(), "IH");
  for (const auto& p : enumerate_products(T).items) {
    const NiebrzydowskiAlgebra A(T, p);
    const bool passes = check_move_invariance(A, ih).passed;
    if (p == PartialProduct::empty(3))
      EXPECT_TRUE(passes);
    else
      EXPECT_EQ(passes, is_idempotent(A)) << format_product_rows(p);
  }
  const NiebrzydowskiAlgebra z4(reference::z4_tribracket(), PartialProduct::diagonal(4));
  EXPECT_TRUE(is_idempotent(z4));
  EXPECT_TRUE(check_move_invariance(z4, ih).passed);
  EXPECT_FALSE(check_move_invariance(builtin_algebra("z4"), ih).passed);
}

TEST(MoveInvariance, R4OneExtendsUniquelyWhenDefined) {
  const auto A = builtin_algebra("full");
  const auto& m = find_move(moves(), "R4.1");
  // boundary (a, b, t) with t = ab
  for (Element a = 1; a <= 3; ++a)
    for (Element b = 1; b <= 3; ++b) {
      const Coloring col{a, b, A.product().at(a, b)};
      EXPECT_EQ(fragment_extensions(A, m.before, col), 1u);
      EXPECT_EQ(fragment_extensions(A, m.after, col), 1u);
    }
}

TEST(MoveInvariance, BreakingTheVertexIdentityFailsR4One) {
  // K with 1*2 = 3 moved to 1*2 = 2: still cancellative, but [1,2,2] = 1 != 2
  const NiebrzydowskiAlgebra A(reference::z3_tribracket(), PartialProduct(3, {0, 2, 0, 0, 0, 1, 2, 0, 0}));
  const auto report = verify_algebra(A);
  EXPECT_FALSE(report.passed);
  EXPECT_TRUE(std::any_of(report.violations.begin(), report.violations.end(),
                          [](const Violation& v) { return v.axiom == axiom::kVertex; }));
  const auto r = check_move_invariance(A, find_move(moves(), "R4.1"));
  ASSERT_FALSE(r.passed);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_NE(r.before_count, r.after_count);
}

// Each graph move pinned to the identities it encodes: breaking one identity
// breaks the matching move.
TEST(MoveShadows, EachMoveDetectsItsIdentities) {
  oracle::Rng rng(41);
  const auto T = reference::z3_tribracket();
  const std::vector<std::pair<std::string, std::vector<std::string>>> shadow = {
      {"R4.1", {axiom::kVertex}},
      {"R4.10", {axiom::kVertex}},
      {"R5.7", {axiom::kLeftProduct, axiom::kLeftRecover}},
      {"R5.10", {axiom::kLeftProduct, axiom::kLeftRecover}},
      {"R5.13", {axiom::kRightProduct, axiom::kRightRecover}},
      {"R5.16", {axiom::kRightProduct, axiom::kRightRecover}},
  };
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto P = oracle::random_product(rng, 3, 0.6);
    const NiebrzydowskiAlgebra A(T, P);
    const auto report = verify_algebra(A);
    bool cancels = std::none_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
      return v.axiom == axiom::kCancelLeft || v.axiom == axiom::kCancelRight;
    });
    if (!cancels) continue;
    ++checked;
    for (const auto& [id, axioms] : shadow) {
      const bool broken = std::any_of(report.violations.begin(), report.violations.end(), [&](const Violation& v) {
        return std::find(axioms.begin(), axioms.end(), v.axiom) != axioms.end();
      });
      EXPECT_EQ(check_move_invariance(A, find_move(moves(), id)).passed, !broken) << id << " " << format_product_rows(P);
    }
  }
  EXPECT_GT(checked, 50);
}

// The executable form of invariance: on random tables over the mod-3
// tribracket, passing every graph move is the same as being an algebra.
TEST(MoveInvariance, GraphMovesAgreeWithTheAxiomsOnRandomTables) {
  oracle::Rng rng(8);
  const auto T = reference::z3_tribracket();
  int algebras = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto P = oracle::random_product(rng, 3, 0.3 + 0.5 * (trial % 3) / 2.0);
    const NiebrzydowskiAlgebra A(T, P);
    const bool ok = verify_algebra(A).passed;
    algebras += ok;
    EXPECT_EQ(passes_graph_moves(A), ok) << format_product_rows(P);
  }
  EXPECT_GT(algebras, 0);
}
