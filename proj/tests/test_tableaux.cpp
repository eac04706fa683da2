#include <gtest/gtest.h>

#include "modmaj/numtheory.hpp"
#include "modmaj/tableaux.hpp"
#include "oracles.hpp"

using modmaj::BigInt;
using modmaj::ModularClassVector;
using modmaj::Partition;
using modmaj::StandardTableau;

namespace {

std::multiset<int> maj_multiset(const Partition& p) {
  std::multiset<int> out;
  for (const auto& t : modmaj::enumerate_syt(p)) out.insert(modmaj::maj(t));
  return out;
}

ModularClassVector vec(std::vector<int> xs) {
  ModularClassVector v;
  v.n = static_cast<int>(xs.size());
  for (int x : xs) v.counts.emplace_back(x);
  return v;
}

}  // namespace

TEST(StandardTableau, RejectsNonStandardWords) {
  EXPECT_THROW(StandardTableau(Partition({2, 2}), {2, 1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(StandardTableau(Partition({2, 2}), {1, 1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(StandardTableau(Partition({2}), {1}), std::invalid_argument);
  const StandardTableau t(Partition({2, 1}), {1, 2, 1});
  EXPECT_EQ(t.at({1, 1}), 1);
  EXPECT_EQ(t.at({2, 1}), 3);
  EXPECT_EQ(t.at({1, 2}), 2);
}

TEST(EnumerateSyt, Examples) {
  EXPECT_EQ(modmaj::enumerate_syt({2, 2}).size(), 2u);
  EXPECT_EQ(modmaj::enumerate_syt({6}).size(), 1u);
  EXPECT_EQ(modmaj::enumerate_syt({3, 2}).size(), 5u);
}

TEST(EnumerateSyt, CountEqualsHookFormulaAndEachTableauOnce) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      const auto ts = modmaj::enumerate_syt(p);
      ASSERT_EQ(BigInt(static_cast<unsigned long>(ts.size())), modmaj::dimension(p)) << p.to_string();
      std::set<std::vector<int>> words;
      for (const auto& t : ts) words.insert(t.row_word());
      ASSERT_EQ(words.size(), ts.size());
    }
  }
}

TEST(EnumerateSyt, MajMatchesPermutationSearch) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      ASSERT_EQ(maj_multiset(p), oracle::maj_multiset_by_permutations(p)) << p.to_string();
    }
  }
}

TEST(DescentSet, Examples) {
  const auto row = modmaj::enumerate_syt({5});
  EXPECT_TRUE(modmaj::descent_set(row.front()).empty());
  EXPECT_EQ(modmaj::maj(row.front()), 0);
  const auto column = modmaj::enumerate_syt({1, 1, 1, 1, 1});
  EXPECT_EQ(modmaj::descent_set(column.front()), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(modmaj::maj(column.front()), 10);
  std::set<std::vector<int>> sets;
  for (const auto& t : modmaj::enumerate_syt({2, 2})) sets.insert(modmaj::descent_set(t));
  EXPECT_EQ(sets, (std::set<std::vector<int>>{{2}, {1, 3}}));
  EXPECT_EQ(maj_multiset({2, 2}), (std::multiset<int>{2, 4}));
}

TEST(Transpose, Examples) {
  const auto row = modmaj::enumerate_syt({4}).front();
  EXPECT_EQ(modmaj::transpose(row), modmaj::enumerate_syt({1, 1, 1, 1}).front());
  for (const auto& t : modmaj::enumerate_syt({2, 2})) {
    EXPECT_EQ(modmaj::maj(t) + modmaj::maj(modmaj::transpose(t)), 6);
  }
}

TEST(Transpose, InvolutionComplementingDescents) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      for (const auto& t : modmaj::enumerate_syt(p)) {
        const auto u = modmaj::transpose(t);
        ASSERT_EQ(u.shape(), p.conjugate());
        ASSERT_EQ(modmaj::transpose(u), t);
        std::set<int> both;
        for (int i : modmaj::descent_set(t)) both.insert(i);
        for (int i : modmaj::descent_set(u)) ASSERT_TRUE(both.insert(i).second);
        ASSERT_EQ(static_cast<int>(both.size()), n - 1);
      }
    }
  }
}

TEST(AmodByEnumeration, Examples) {
  EXPECT_EQ(modmaj::amod_by_enumeration({2, 2}), vec({1, 0, 1, 0}));
  EXPECT_EQ(modmaj::amod_by_enumeration({4}), vec({1, 0, 0, 0}));
  EXPECT_EQ(modmaj::amod_by_enumeration({1}), vec({1}));
}

TEST(AmodByEnumeration, BudgetGuard) {
  EXPECT_THROW(modmaj::amod_by_enumeration({3, 2}, 4), modmaj::BudgetExceeded);
  EXPECT_NO_THROW(modmaj::amod_by_enumeration({3, 2}, 5));
}

TEST(AmodByEnumeration, GcdLawAndTransposeSymmetry) {
  namespace nt = modmaj::numtheory;
  for (int n = 1; n <= 10; ++n) {
    const int shift = n * (n - 1) / 2;
    for (const auto& p : modmaj::partitions_of(n)) {
      const auto a = modmaj::amod_by_enumeration(p);
      const auto at = modmaj::amod_by_enumeration(p.conjugate());
      for (int r = 0; r < n; ++r) {
        ASSERT_EQ(a[r], a[static_cast<int>(nt::gcd(n, r))]) << p.to_string();
        ASSERT_EQ(a[r], at[((shift - r) % n + n) % n]) << p.to_string();
      }
    }
  }
}

TEST(AmodByEnumeration, TwoRowHookHasEveryNonzeroMajOnce) {
  for (int n = 2; n <= 12; ++n) {
    std::multiset<int> expected;
    for (int i = 1; i < n; ++i) expected.insert(i);
    EXPECT_EQ(maj_multiset(Partition::hook(n, 1)), expected) << n;
  }
}
