#include <gtest/gtest.h>

#include "modmaj/characters.hpp"
#include "modmaj/modmaj.hpp"
#include "modmaj/numtheory.hpp"
#include "modmaj/qpoly.hpp"
#include "modmaj/verify.hpp"

using modmaj::BigInt;
using modmaj::ExceptionRecord;
using modmaj::Partition;
namespace nt = modmaj::numtheory;

TEST(CharacterFormula, Examples) {
  EXPECT_EQ(modmaj::amod_by_character_formula({2, 2}), modmaj::amod_by_enumeration({2, 2}));
  EXPECT_EQ(modmaj::amod_by_character_formula({3, 3}).zero_residues(), (std::vector<int>{2, 4}));
  EXPECT_EQ(modmaj::amod_by_character_formula({1}).counts, (std::vector<BigInt>{1}));
}

TEST(CharacterFormula, MatchesQhookAndEnumeration) {
  for (int n = 1; n <= 20; ++n) {
    modmaj::for_each_partition(n, [&](const Partition& p) {
      const auto a = modmaj::amod_by_character_formula(p);
      ASSERT_EQ(a, modmaj::amod_by_qhook(p)) << p.to_string();
      if (n <= 10) ASSERT_EQ(a, modmaj::amod_by_enumeration(p)) << p.to_string();
      for (int r = 0; r < n; ++r) ASSERT_EQ(a[r], a[static_cast<int>(nt::gcd(n, r))]);
    });
  }
}

TEST(InducedMultiplicity, Examples) {
  EXPECT_EQ(modmaj::induced_multiplicity(modmaj::cyclic_class_weights(4, 0), {2, 2}), 1);
  EXPECT_EQ(modmaj::induced_multiplicity(modmaj::symmetric_trivial_class_weights(4), {4}), 1);
  for (const auto& p : modmaj::partitions_of(4)) {
    if (p == Partition({4})) continue;
    EXPECT_EQ(modmaj::induced_multiplicity(modmaj::symmetric_trivial_class_weights(4), p), 0);
  }
  EXPECT_THROW(modmaj::induced_multiplicity(modmaj::symmetric_trivial_class_weights(4), {3}),
               std::invalid_argument);
}

TEST(InducedMultiplicity, RejectsInconsistentWeights) {
  modmaj::ClassWeightTable bad;
  bad.group_order = 2;
  bad.weights[Partition({1, 1, 1})] = 1;
  EXPECT_THROW(modmaj::induced_multiplicity(bad, {3}), modmaj::InternalError);
}

TEST(InducedMultiplicity, CyclicWeightsReproduceCharacterFormula) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) {
      const auto a = modmaj::amod_by_character_formula(p);
      for (int r = 0; r < n; ++r) {
        ASSERT_EQ(modmaj::induced_multiplicity(modmaj::cyclic_class_weights(n, r), p), a[r])
            << p.to_string() << " r=" << r;
      }
    }
  }
}

TEST(ConjugacyClassSize, SumsToGroupOrder) {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& mu : modmaj::partitions_of(n)) total += modmaj::conjugacy_class_size(mu);
    EXPECT_EQ(total, modmaj::factorial(static_cast<unsigned>(n)));
  }
}

TEST(ExpectedZero, Examples) {
  EXPECT_TRUE(modmaj::expected_zero({2, 2, 2}, 5));
  EXPECT_TRUE(modmaj::expected_zero({2, 1, 1, 1}, 0));
  for (int r = 0; r < 5; ++r) EXPECT_FALSE(modmaj::expected_zero({3, 2}, r));
  EXPECT_FALSE(modmaj::expected_zero({1}, 0));
}

TEST(ExceptionRecords, SmallSizes) {
  EXPECT_TRUE(modmaj::exception_records(1).empty());
  const std::vector<ExceptionRecord> four{{{1, 1, 1, 1}, {0, 1, 3}},
                                          {{2, 1, 1}, {2}},
                                          {{2, 2}, {1, 3}},
                                          {{3, 1}, {0}},
                                          {{4}, {1, 2, 3}}};
  EXPECT_EQ(modmaj::exception_records(4), four);
  const auto six = modmaj::exception_records(6);
  auto has = [&](const Partition& p, std::vector<int> rs) {
    return std::find(six.begin(), six.end(), ExceptionRecord{p, rs}) != six.end();
  };
  EXPECT_TRUE(has({2, 2, 2}, {1, 5}));
  EXPECT_TRUE(has({3, 3}, {2, 4}));
}

TEST(Classification, ZerosMatchPredictionUpTo20) {
  for (int n = 1; n <= 20; ++n) {
    modmaj::for_each_partition(n, [&](const Partition& p) {
      const auto a = modmaj::amod_by_qhook(p);
      for (int r = 0; r < n; ++r) {
        ASSERT_EQ(a[r] == 0, modmaj::expected_zero(p, r)) << p.to_string() << " r=" << r;
      }
    });
  }
}

TEST(Classification, ZeroShapesAtResidueZero) {
  for (int n = 1; n <= 20; ++n) {
    std::vector<Partition> expected;
    modmaj::for_each_partition(n, [&](const Partition& p) {
      const bool predicted = (n >= 2 && p == Partition::hook(n, 1)) ||
                             (n % 2 == 1 && n >= 3 && p == Partition::hook(n, n - 2)) ||
                             (n % 2 == 0 && p == Partition::hook(n, n - 1));
      EXPECT_EQ(modmaj::amod_by_qhook(p)[0] == 0, predicted) << p.to_string();
    });
  }
}

TEST(VerifyMainTheorem, SmallRuns) {
  const auto one = modmaj::verify_main_theorem(1);
  EXPECT_EQ(one.mismatches, 0u);
  EXPECT_EQ(one.shapes, 1u);
  const auto four = modmaj::verify_main_theorem(4, 2);
  EXPECT_EQ(four.mismatches, 0u);
  EXPECT_EQ(four.shapes, 1u + 2 + 3 + 5);
}

TEST(VerifyMainTheorem, SmallDimensionCountMatchesHookFormulaScan) {
  const auto report = modmaj::verify_main_theorem(16, 2);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 16; ++n) {
    for (const auto& p : modmaj::partitions_of(n)) expected += modmaj::dimension(p) < n * n * n;
  }
  EXPECT_EQ(report.mismatches, 0u);
  EXPECT_EQ(report.small_dimension_shapes, expected);
  EXPECT_TRUE(report.mismatch_records.empty());
}

TEST(Suites, EveryNamedSuitePassesAtSmallSizes) {
  modmaj::SweepOptions options;
  for (const auto& suites : {modmaj::verify_suites(), modmaj::bound_suites()}) {
    for (const auto& name : suites) {
      for (int n = 1; n <= 9; ++n) {
        const auto r = modmaj::run_suite(name, n, options);
        EXPECT_EQ(r.violations, 0u) << name << " n=" << n;
        EXPECT_EQ(r.suite, name);
      }
    }
  }
  EXPECT_THROW(modmaj::run_suite("nope", 3, options), std::invalid_argument);
}

TEST(Suites, ParallelRunMatchesSerial) {
  modmaj::SweepOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = modmaj::run_suite("classification", 14, serial);
  const auto b = modmaj::run_suite("classification", 14, parallel);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.counters, b.counters);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].shape, b.records[i].shape);
}
