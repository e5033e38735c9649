#include <gtest/gtest.h>

#include "nakayama/algebra.hpp"
#include "nakayama/sweep.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nakayama;

using testing_util::error_code;
using testing_util::example_a5;

TEST(Wrap, Examples) {
  EXPECT_EQ(wrap(3, 5), 3);
  EXPECT_EQ(wrap(6, 5), 1);
  EXPECT_EQ(wrap(10, 5), 5);
  EXPECT_EQ(wrap(0, 5), 5);
  EXPECT_EQ(wrap(-1, 5), 4);
}

TEST(Wrap, IdempotentAndPeriodic) {
  for (int n = 2; n <= 9; ++n) {
    for (int v = 1; v <= n; ++v) EXPECT_EQ(wrap(v, n), v);
    for (int v = -3 * n; v <= 3 * n; ++v) {
      EXPECT_EQ(wrap(v + n, n), wrap(v, n));
      EXPECT_GE(wrap(v, n), 1);
      EXPECT_LE(wrap(v, n), n);
    }
  }
}

TEST(Validate, ExampleA5) {
  const auto a = example_a5();
  ASSERT_EQ(a.generators().size(), 2u);
  EXPECT_EQ(a.denouement(a.generators()[0]), 3);
  EXPECT_EQ(a.denouement(a.generators()[1]), 4);
}

TEST(Validate, Errors) {
  EXPECT_EQ(error_code([] { linear_algebra(3, {{1, 3}, {1, 3}}); }), errc::non_minimal_ideal);
  EXPECT_EQ(error_code([] { linear_algebra(4, {{1, 4}, {2, 3}}); }), errc::non_minimal_ideal);
  EXPECT_EQ(error_code([] { cyclic_algebra(3, {}); }), errc::empty_cyclic_ideal);
  EXPECT_EQ(error_code([] { linear_algebra(4, {{3, 3}}); }), errc::generator_out_of_range);
  EXPECT_EQ(error_code([] { linear_algebra(4, {{0, 3}}); }), errc::generator_out_of_range);
  EXPECT_EQ(error_code([] { cyclic_algebra(3, {{4, 3}}); }), errc::generator_out_of_range);
  EXPECT_EQ(error_code([] { linear_algebra(4, {{1, 2}}); }), errc::length_too_short);
  EXPECT_EQ(error_code([] { linear_algebra(1); }), errc::invalid_quiver);
}

TEST(Validate, CyclicContainmentWraps) {
  // 3:4 on the 3-cycle visits 3,1,2,3 and so contains 1:3 (1,2,3).
  EXPECT_EQ(error_code([] { cyclic_algebra(3, {{1, 3}, {3, 4}}); }), errc::non_minimal_ideal);
  // Long relations wrapping more than once are accepted.
  EXPECT_NO_THROW(cyclic_algebra(2, {{1, 5}}));
}

TEST(Validate, SortsByHook) {
  const auto a = linear_algebra(6, {{4, 3}, {1, 3}});
  EXPECT_EQ(a.generators().front().hook, 1);
  EXPECT_EQ(a, linear_algebra(6, {{1, 3}, {4, 3}}));
}

TEST(Kupisch, Examples) {
  EXPECT_EQ(example_a5().kupisch(), (std::vector<int>{2, 2, 3, 2, 1}));
  EXPECT_EQ(linear_algebra(4).kupisch(), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(cyclic_algebra(3, {{1, 3}}).kupisch(), (std::vector<int>{2, 4, 3}));
}

TEST(Kupisch, MatchesLongestNonzeroPath) {
  for (auto kind : {QuiverKind::linear, QuiverKind::cyclic}) {
    for (int n = 2; n <= 5; ++n) {
      const int max_len = kind == QuiverKind::linear ? n : n + 2;
      for (const auto& a : enumerate_algebras(kind, n, max_len)) {
        const QuiverSpec q{kind, n};
        const auto& gens = a.generators();
        ASSERT_EQ(a.kupisch(), oracle::kupisch(q, gens)) << to_string(kind) << " n=" << n;
        for (int j = 1; j <= n; ++j) {
          EXPECT_FALSE(oracle::path_is_zero(oracle::path(j, a.kupisch(j), n), gens, n));
          if (kind == QuiverKind::cyclic || j + a.kupisch(j) <= n)
            EXPECT_TRUE(oracle::path_is_zero(oracle::path(j, a.kupisch(j) + 1, n), gens, n));
        }
      }
    }
  }
}

TEST(Kupisch, SerialChainAndHereditary) {
  for (auto kind : {QuiverKind::linear, QuiverKind::cyclic}) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& a : enumerate_algebras(kind, n, kind == QuiverKind::linear ? n : n + 2)) {
        for (int j = 1; j <= n; ++j) {
          EXPECT_GE(a.kupisch(j), 1);
          EXPECT_LE(a.kupisch(j) - 1, a.kupisch(wrap(j + 1, n)));
        }
        if (kind == QuiverKind::linear) EXPECT_EQ(a.kupisch(n), 1);
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto a = linear_algebra(n);
    for (int j = 1; j <= n; ++j) EXPECT_EQ(a.kupisch(j), n - j + 1);
  }
}

TEST(Validate, MinimalSetsHaveDistinctEndpoints) {
  for (auto kind : {QuiverKind::linear, QuiverKind::cyclic}) {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& a : enumerate_algebras(kind, n, kind == QuiverKind::linear ? n : n + 2)) {
        std::set<int> hooks, dens;
        for (const auto& g : a.generators()) {
          EXPECT_TRUE(hooks.insert(g.hook).second);
          EXPECT_TRUE(dens.insert(a.denouement(g)).second);
        }
      }
    }
  }
}

TEST(Validate, ContainmentAgreesWithSubpathScan) {
  for (auto kind : {QuiverKind::linear, QuiverKind::cyclic}) {
    for (int n = 2; n <= 5; ++n) {
      const QuiverSpec q{kind, n};
      for (int h1 = 1; h1 <= n; ++h1)
        for (int l1 = 3; l1 <= 2 * n + 2; ++l1)
          for (int h2 = 1; h2 <= n; ++h2)
            for (int l2 = 3; l2 <= 2 * n + 2; ++l2) {
              if (kind == QuiverKind::linear && (h1 + l1 - 1 > n || h2 + l2 - 1 > n)) continue;
              const bool expected = oracle::contains_subpath(oracle::path(h1, l1, n), oracle::path(h2, l2, n));
              EXPECT_EQ(window_contains(q, {h1, l1}, {h2, l2}), expected);
            }
    }
  }
}

TEST(Uniserial, ProjectiveAndRadical) {
  const auto a = example_a5();
  EXPECT_EQ(a.projective(3), (Uniserial{3, 3}));
  EXPECT_EQ(linear_algebra(4).projective(1), (Uniserial{1, 4}));
  EXPECT_EQ(a.projective(5), (Uniserial{5, 1}));
  EXPECT_EQ(a.radical({1, 2}), (Uniserial{2, 1}));
  EXPECT_TRUE(a.radical({4, 1}).is_zero());
  EXPECT_EQ(cyclic_algebra(3, {{1, 3}}).radical({3, 3}), (Uniserial{1, 2}));
  EXPECT_EQ(error_code([&] { a.radical(Uniserial::zero()); }), errc::zero_module);
}

TEST(Uniserial, ValidityAgainstKupisch) {
  const auto a = cyclic_algebra(3, {{1, 3}});
  EXPECT_TRUE(a.is_module({2, 4}));
  EXPECT_FALSE(a.is_module({1, 3}));
  EXPECT_TRUE(a.is_module(Uniserial::zero()));
  EXPECT_TRUE(a.is_projective({2, 4}));
  EXPECT_FALSE(a.is_projective({2, 3}));
}
