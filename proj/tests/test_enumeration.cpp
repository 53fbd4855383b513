#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "reference_tables.hpp"

using namespace nalg;

namespace {

// Every table with entries 1..n, filtered by the reference axiom check.
std::vector<Tribracket> brute_tribrackets(int n) {
  const std::size_t cells = static_cast<std::size_t>(n * n * n);
  std::vector<Element> t(cells, 1);
  std::vector<Tribracket> out;
  for (;;) {
    Tribracket T(n, t);
    if (oracle::is_tribracket(T)) out.push_back(T);
    std::size_t i = cells;
    while (i > 0 && t[i - 1] == n) t[--i] = 1;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

std::vector<PartialProduct> brute_products(const Tribracket& T) {
  const int n = T.size();
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<Element> t(cells, 0);
  std::vector<PartialProduct> out;
  for (;;) {
    PartialProduct P(n, t);
    if (oracle::product_ok(T, P)) out.push_back(P);
    std::size_t i = cells;
    while (i > 0 && t[i - 1] == n) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

}  // namespace

TEST(EnumerateTribrackets, SingletonCarrier) {
  const auto r = enumerate_tribrackets(1);
  ASSERT_EQ(r.items.size(), 1u);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.items[0](1, 1, 1), 1);
}

// Values frozen from an independent exhaustive search.
TEST(EnumerateTribrackets, FrozenCounts) {
  EXPECT_EQ(enumerate_tribrackets(2).items.size(), 2u);
  EXPECT_EQ(enumerate_tribrackets(3).items.size(), 12u);
  const auto r4 = enumerate_tribrackets(4);
  EXPECT_EQ(r4.items.size(), 168u);
  EXPECT_EQ(r4.candidates, 55296u);  // latin cubes of order 4
}

TEST(EnumerateTribrackets, TwoElementsAgreeWithBruteForce) {
  EXPECT_EQ(enumerate_tribrackets(2).items, brute_tribrackets(2));
}

TEST(EnumerateTribrackets, ContainsAllAlexanderModThree) {
  const auto all = enumerate_tribrackets(3).items;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y)
      EXPECT_NE(std::find(all.begin(), all.end(), alexander_tribracket(3, x, y)), all.end()) << x << "," << y;
}

TEST(EnumerateTribrackets, SortedVerifiedAndDeterministic) {
  for (int n = 1; n <= 4; ++n) {
    const auto a = enumerate_tribrackets(n).items;
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
    for (const auto& T : a) EXPECT_TRUE(verify_tribracket(T).passed);
    EXPECT_EQ(a, enumerate_tribrackets(n).items);
  }
}

TEST(EnumerateTribrackets, BudgetStopsWithPartialFlag) {
  EnumerationBudget b;
  b.max_candidates = 10;
  const auto r = enumerate_tribrackets(3, b);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.candidates, 10u);
  const auto full = enumerate_tribrackets(3).items;
  ASSERT_LE(r.items.size(), full.size());
  EXPECT_TRUE(std::equal(r.items.begin(), r.items.end(), full.begin()));

  EnumerationBudget t;
  t.timeout_seconds = 0.0;
  const auto rt = enumerate_tribrackets(4, t);
  EXPECT_FALSE(rt.complete);
  EXPECT_THROW(enumerate_tribrackets(0), InvalidParameter);
}

TEST(EnumerateProducts, EightOnTheModThreeTribracket) {
  const auto r = enumerate_products(reference::z3_tribracket());
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.items.size(), 8u);
  auto expect = reference::z3_products();
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(r.items, expect);
}

TEST(EnumerateProducts, EmptyProductAlwaysPresent) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& T : enumerate_tribrackets(n).items) {
      const auto items = enumerate_products(T).items;
      ASSERT_FALSE(items.empty());
      EXPECT_EQ(items.front(), PartialProduct::empty(n));
    }
}

TEST(EnumerateProducts, ModFourContainsReferenceProduct) {
  const auto items = enumerate_products(alexander_tribracket(4, 1, 1)).items;
  EXPECT_NE(std::find(items.begin(), items.end(), reference::z4_product()), items.end());
  // frozen regression value
  EXPECT_EQ(items.size(), 9u);
}

TEST(EnumerateProducts, EveryOutputVerifies) {
  std::vector<Tribracket> pool = enumerate_tribrackets(3).items;
  pool.push_back(alexander_tribracket(4, 1, 1));
  pool.push_back(alexander_tribracket(4, 3, 1));
  pool.push_back(alexander_tribracket(5, 2, 3));
  for (const auto& T : pool) {
    const auto items = enumerate_products(T).items;
    EXPECT_TRUE(std::is_sorted(items.begin(), items.end()));
    for (const auto& P : items) EXPECT_TRUE(verify_algebra(NiebrzydowskiAlgebra(T, P)).passed);
    EXPECT_EQ(items, enumerate_products(T).items);
  }
}

TEST(EnumerateProducts, MatchesBruteForceForTwoAndThreeElements) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& T : enumerate_tribrackets(n).items) {
      EXPECT_EQ(enumerate_products(T).items, brute_products(T));
      if (n == 3) break;  // one 3-element tribracket keeps this under a second
    }
  EXPECT_EQ(enumerate_products(reference::z3_tribracket()).items, brute_products(reference::z3_tribracket()));
}

TEST(EnumerateProducts, BudgetStopsWithPartialFlag) {
  EnumerationBudget b;
  b.max_candidates = 3;
  const auto r = enumerate_products(reference::z3_tribracket(), b);
  EXPECT_FALSE(r.complete);
  EXPECT_LE(r.items.size(), 3u);
}

TEST(EnumerateIdempotent, OnlyTheDiagonal) {
  const auto T = reference::z3_tribracket();
  const auto ids = enumerate_idempotent_products(T);
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_EQ(ids[0], PartialProduct::diagonal(3));

  // frozen: filtering the eight leaves exactly one
  const auto all = enumerate_products(T).items;
  const auto count =
      std::count_if(all.begin(), all.end(), [&](const PartialProduct& p) { return is_idempotent(NiebrzydowskiAlgebra(T, p)); });
  EXPECT_EQ(count, 1);

  for (int n = 1; n <= 3; ++n)
    for (const auto& U : enumerate_tribrackets(n).items) {
      const auto filtered = enumerate_products(U).items;
      std::vector<PartialProduct> expect;
      for (const auto& p : filtered)
        if (is_idempotent(NiebrzydowskiAlgebra(U, p))) expect.push_back(p);
      EXPECT_EQ(enumerate_idempotent_products(U), expect);
      for (const auto& p : expect)
        for (Element a = 1; a <= n; ++a)
          for (Element b = 1; b <= n; ++b) EXPECT_EQ(p.defined(a, b), a == b);
    }
}
