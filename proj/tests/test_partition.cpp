#include <gtest/gtest.h>

#include "modmaj/partition.hpp"
#include "oracles.hpp"

using modmaj::BigInt;
using modmaj::Cell;
using modmaj::DiagOrder;
using modmaj::Partition;

namespace {

BigInt product(const std::vector<int>& xs) {
  BigInt p = 1;
  for (int x : xs) p *= x;
  return p;
}

int sum(const std::vector<int>& xs) { return std::accumulate(xs.begin(), xs.end(), 0); }

}  // namespace

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("4,2,1"), Partition({4, 2, 1}));
  EXPECT_EQ(Partition::parse("2^3,1"), Partition({2, 2, 2, 1}));
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_EQ(Partition({3, 3, 1}).to_string(), "3,3,1");
  EXPECT_EQ(Partition().to_string(), "");
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({5}).conjugate(), Partition({1, 1, 1, 1, 1}));
  for (int n = 0; n <= 14; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
  }
}

TEST(Partition, EnumerationCountAndOrder) {
  for (int n = 0; n <= 25; ++n) {
    const auto ps = modmaj::partitions_of(n);
    EXPECT_EQ(ps.size(), oracle::partition_count(n)) << n;
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end())) << n;
    for (const auto& p : ps) EXPECT_EQ(p.size(), n);
  }
}

TEST(HookLengths, Examples) {
  EXPECT_EQ(Partition({2, 2}).hook_lengths(), (std::vector<int>{1, 2, 2, 3}));
  EXPECT_EQ(Partition({1}).hook_lengths(), (std::vector<int>{1}));
  EXPECT_EQ(Partition({3, 1}).hook_lengths(), (std::vector<int>{1, 1, 2, 4}));
}

TEST(HookLengths, MatchCellScan) {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      ASSERT_EQ(p.hook_lengths(), oracle::hooks_by_scan(p)) << p.to_string();
    }
  }
}

TEST(OppositeHookLengths, Examples) {
  EXPECT_EQ(Partition({1}).opposite_hook_lengths(), (std::vector<int>{1}));
  EXPECT_EQ(Partition({2, 2}).opposite_hook_lengths(), (std::vector<int>{1, 2, 2, 3}));
  for (int w = 1; w <= 6; ++w) {
    for (int h = 1; h <= 6; ++h) {
      const auto r = Partition::rectangle(w, h);
      EXPECT_EQ(r.opposite_hook_lengths(), r.hook_lengths());
    }
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(modmaj::dimension({2, 2}), 2);
  EXPECT_EQ(modmaj::dimension({6, 1}), 6);
  EXPECT_EQ(modmaj::dimension({1}), 1);
  EXPECT_EQ(modmaj::dimension({3, 2}), 5);
}

TEST(RemovableRibbons, Examples) {
  const auto steps = modmaj::removable_ribbons({2, 2}, 2);
  ASSERT_EQ(steps.size(), 2u);
  bool saw_row = false, saw_column = false;
  for (const auto& s : steps) {
    if (s.result == Partition({2})) {
      saw_row = true;
      EXPECT_EQ(s.height, 0);
    }
    if (s.result == Partition({1, 1})) {
      saw_column = true;
      EXPECT_EQ(s.height, 1);
    }
  }
  EXPECT_TRUE(saw_row && saw_column);
  EXPECT_TRUE(modmaj::removable_ribbons({2, 1}, 2).empty());
  const auto whole = modmaj::removable_ribbons({4}, 4);
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_TRUE(whole[0].result.empty());
  EXPECT_EQ(whole[0].height, 0);
}

TEST(RemovableRibbons, MatchExhaustiveSearch) {
  for (int n = 1; n <= 11; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      for (int ell = 1; ell <= n; ++ell) {
        auto expected = oracle::ribbons_by_search(p, ell);
        auto got = modmaj::removable_ribbons(p, ell);
        ASSERT_EQ(got.size(), expected.size()) << p.to_string() << " ell=" << ell;
        for (const auto& r : expected) {
          auto it = std::find_if(got.begin(), got.end(),
                                 [&](const auto& s) { return s.result == r.inner; });
          ASSERT_NE(it, got.end()) << p.to_string();
          EXPECT_EQ(it->height, r.height) << p.to_string();
        }
      }
    }
  }
}

TEST(EllCore, Examples) {
  EXPECT_TRUE(modmaj::ell_core({2, 2}, 2).empty());
  EXPECT_EQ(modmaj::ell_core({2, 1}, 2), Partition({2, 1}));
  for (const auto& p : modmaj::partitions_of(8)) EXPECT_TRUE(modmaj::ell_core(p, 1).empty());
}

TEST(EllCore, AbacusMatchesGreedyRemoval) {
  for (int n = 0; n <= 16; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      for (int ell = 1; ell <= 6; ++ell) {
        const auto core = modmaj::ell_core(p, ell);
        ASSERT_EQ(core, modmaj::ell_core_greedy(p, ell, modmaj::RemovalOrder::first));
        ASSERT_EQ(core, modmaj::ell_core_greedy(p, ell, modmaj::RemovalOrder::last));
        if (n <= 10) ASSERT_EQ(core, oracle::core_by_search(p, ell)) << p.to_string();
      }
    }
  }
}

TEST(IsRibbon, Examples) {
  EXPECT_TRUE(modmaj::is_ribbon({2, 2}, {2}));
  EXPECT_FALSE(modmaj::is_ribbon({2, 2}, {}));
  EXPECT_FALSE(modmaj::is_ribbon({3, 1}, {3, 1}));
  EXPECT_FALSE(modmaj::is_ribbon({3, 1}, {2}));  // two disconnected cells
  EXPECT_THROW(modmaj::is_ribbon({2}, {1, 1}), std::invalid_argument);
}

TEST(DiagonalFibers, Examples) {
  EXPECT_EQ(modmaj::diagonal_fibers({4, 4, 4, 4}), (std::vector<int>{1, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(modmaj::diagonal_fibers({1}), (std::vector<int>{1}));
  EXPECT_EQ(modmaj::diagonal_fibers(Partition::hook(7, 2)), (std::vector<int>{1, 2, 2, 1, 1}));
}

TEST(DiagonalExcess, Examples) {
  EXPECT_EQ(modmaj::diagonal_excess({3, 3}), 2);
  EXPECT_EQ(modmaj::diagonal_excess({6}), 0);
  EXPECT_EQ(modmaj::diagonal_excess({4, 4, 4, 4}), 9);
  EXPECT_EQ(modmaj::capped_excess({4, 4, 4, 4}), 7);
}

TEST(DiagCompare, Examples) {
  EXPECT_EQ(modmaj::diag_compare({3, 1}, {2, 2}), DiagOrder::equivalent);
  EXPECT_EQ(modmaj::diag_compare({1}, {1}), DiagOrder::equivalent);
  EXPECT_EQ(modmaj::diag_compare({3}, {1, 1, 1}), DiagOrder::equivalent);
  EXPECT_EQ(modmaj::diag_compare({2, 2}, {4}), DiagOrder::less_or_equal);
  EXPECT_EQ(modmaj::diag_compare({4}, {2, 2}), DiagOrder::greater_or_equal);
}

TEST(DiagCompare, HookMaximality) {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      const int big_n = modmaj::capped_excess(p);
      const auto cmp = modmaj::diag_compare(p, Partition::hook(n, big_n));
      ASSERT_TRUE(cmp == DiagOrder::less_or_equal || cmp == DiagOrder::equivalent)
          << p.to_string();
    }
  }
}

TEST(StaircasePeak, Examples) {
  EXPECT_EQ(modmaj::staircase_peak({4, 4, 4, 4}), 4);
  EXPECT_EQ(modmaj::staircase_peak({1}), 1);
  EXPECT_EQ(modmaj::staircase_peak({5, 1}), 2);
}

TEST(Structure, OppositeHookSumsAndProducts) {
  for (int n = 1; n <= 25; ++n) {
    modmaj::for_each_partition(n, [&](const Partition& p) {
      const auto h = p.hook_lengths();
      const auto op = p.opposite_hook_lengths();
      ASSERT_EQ(sum(h), sum(op)) << p.to_string();
      const BigInt ph = product(h), pop = product(op);
      ASSERT_GE(pop, ph) << p.to_string();
      ASSERT_EQ(pop == ph, p.is_rectangle()) << p.to_string();
    });
  }
}

TEST(Structure, FibersAreUnimodalStaircases) {
  for (int n = 1; n <= 25; ++n) {
    modmaj::for_each_partition(n, [&](const Partition& p) {
      const auto d = modmaj::diagonal_fibers(p);
      const int m = modmaj::staircase_peak(p);
      for (int i = 1; i <= m; ++i) ASSERT_EQ(d[static_cast<std::size_t>(i - 1)], i) << p.to_string();
      for (std::size_t i = static_cast<std::size_t>(m); i < d.size(); ++i) {
        ASSERT_LE(d[i], d[i - 1]) << p.to_string();
      }
      // m is the largest staircase (m, m-1, ..., 1) inside λ.
      for (int b = 1; b <= m; ++b) ASSERT_GE(p.row(b), m - b + 1);
      bool bigger = true;
      for (int b = 1; b <= m + 1; ++b) bigger = bigger && p.row(b) >= m + 2 - b;
      ASSERT_FALSE(bigger) << p.to_string();
    });
  }
}

TEST(Structure, DiagonalPreorderOrdersOppositeHookProducts) {
  for (int n = 1; n <= 14; ++n) {
    const auto ps = modmaj::partitions_of(n);
    std::vector<BigInt> prods;
    for (const auto& p : ps) prods.push_back(product(p.opposite_hook_lengths()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (modmaj::diag_leq(ps[i], ps[j])) ASSERT_LE(prods[i], prods[j]);
      }
    }
  }
}

TEST(Structure, RearrangementPairsLargeWithSmall) {
  // Exhaustive over weakly decreasing x, y of length m <= 6 with entries <= 4.
  for (int m = 1; m <= 6; ++m) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int cap) -> void {
      if (static_cast<int>(cur.size()) == m) {
        seqs.push_back(cur);
        return;
      }
      for (int v = cap; v >= 0; --v) {
        cur.push_back(v);
        self(self, v);
        cur.pop_back();
      }
    };
    gen(gen, 4);
    for (const auto& x : seqs) {
      for (const auto& y : seqs) {
        BigInt same = 1, opposite = 1;
        bool symmetric = true;
        for (int i = 0; i < m; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          const auto mi = static_cast<std::size_t>(m - 1 - i);
          same *= x[ui] + y[ui];
          opposite *= x[ui] + y[mi];
          symmetric = symmetric && (x[ui] == x[mi] || y[ui] == y[mi]);
        }
        ASSERT_LE(same, opposite);
        if (same != 0) ASSERT_EQ(same == opposite, symmetric);
      }
    }
  }
}

TEST(Structure, RearrangementEqualityNeedsNonzeroProduct) {
  // x = y = (1, 0, 0): both products vanish, yet x_1 != x_3 and y_1 != y_3.
  const std::vector<int> x{1, 0, 0};
  EXPECT_EQ((x[0] + x[0]) * (x[1] + x[1]) * (x[2] + x[2]), 0);
  EXPECT_EQ((x[0] + x[2]) * (x[1] + x[1]) * (x[2] + x[0]), 0);
}
