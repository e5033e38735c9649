#include <gtest/gtest.h>

#include "nakayama/sweep.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nakayama;
using testing_util::error_code;

namespace {

std::set<std::vector<Generator>> generator_sets(QuiverKind kind, int n, int max_len) {
  std::set<std::vector<Generator>> out;
  for (const auto& a : enumerate_algebras(kind, n, max_len)) EXPECT_TRUE(out.insert(a.generators()).second);
  return out;
}

SweepConfig config(SweepKind kind, int lo, int hi, std::string checks) {
  SweepConfig cfg;
  cfg.kind = kind;
  cfg.n_min = lo;
  cfg.n_max = hi;
  cfg.checks = std::move(checks);
  return cfg;
}

}  // namespace

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_algebras(QuiverKind::linear, 3, 3).size(), 2u);
  EXPECT_EQ(enumerate_algebras(QuiverKind::linear, 4, 4).size(), 5u);
  const auto c = enumerate_algebras(QuiverKind::cyclic, 2, 3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].generators(), (std::vector<Generator>{{1, 3}}));
}

TEST(Enumerate, MatchesSubsetFilter) {
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(generator_sets(QuiverKind::linear, n, n), oracle::antichains(QuiverKind::linear, n, n)) << n;
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(generator_sets(QuiverKind::cyclic, n, n + 2), oracle::antichains(QuiverKind::cyclic, n, n + 2)) << n;
}

TEST(Sweep, LinearPassesAllButMonotonicity) {
  const auto r = cross_validate(config(SweepKind::linear, 2, 5, "abcdefgijkl"));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.interpretive.empty());
  std::uint64_t orderings = 0;
  for (int n = 2; n <= 5; ++n) orderings += enumerate_algebras(QuiverKind::linear, n, n).size() * factorial(n).convert_to<std::uint64_t>();
  EXPECT_EQ(r.orderings_checked, orderings);
  EXPECT_EQ(r.algebras_checked, r.rows.size());
}

TEST(Sweep, CyclicPassesHardChecks) {
  const auto r = cross_validate(config(SweepKind::cyclic, 2, 4, "abcdefikl"));
  EXPECT_TRUE(r.passed());
  const auto bound = cross_validate(config(SweepKind::cyclic, 3, 4, "g"));
  EXPECT_TRUE(bound.passed());
}

TEST(Sweep, CyclicGldMismatchesAreInterpretive) {
  const auto r = cross_validate(config(SweepKind::cyclic, 2, 4, "j"));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.interpretive.empty());
  for (const auto& f : r.interpretive) EXPECT_EQ(f.check, 'j');
}

TEST(Sweep, TwoCycleEqualityCaseFails) {
  const auto r = cross_validate(config(SweepKind::cyclic, 2, 2, "g"));
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].algebra, "quiver = cyclic\nn = 2\nrelation = 1:3\n");
}

TEST(Sweep, MonotonicityFailuresCarryReproData) {
  const auto r = cross_validate(config(SweepKind::linear, 4, 4, "h"));
  ASSERT_FALSE(r.passed());
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.check, 'h');
    EXPECT_NO_THROW(parse_algebra(f.algebra));
  }
}

TEST(Sweep, Deterministic) {
  const auto cfg = config(SweepKind::both, 2, 4, all_checks());
  const auto a = cross_validate(cfg);
  const auto b = cross_validate(cfg);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.interpretive, b.interpretive);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.orderings_checked, b.orderings_checked);
}

TEST(Sweep, HistogramTwoThirdsIsPrincipalLengthThree) {
  const auto r = cross_validate(config(SweepKind::linear, 5, 5, "f"));
  ASSERT_TRUE(r.histogram.contains("2/3"));
  for (const auto& row : r.rows) {
    const bool principal3 = row.generators == "1:3" || row.generators == "2:3" || row.generators == "3:3";
    EXPECT_EQ(row.ratio == "2/3", principal3) << row.generators;
  }
}

TEST(Sweep, FailFastStopsAtFirstFailure) {
  auto cfg = config(SweepKind::linear, 4, 6, "h");
  cfg.fail_fast = true;
  EXPECT_EQ(cross_validate(cfg).failures.size(), 1u);
}

TEST(Sweep, RejectsBadConfig) {
  EXPECT_EQ(error_code([] { cross_validate(config(SweepKind::linear, 2, 9, "a")); }), errc::too_large);
  EXPECT_EQ(error_code([] { cross_validate(config(SweepKind::linear, 2, 3, "z")); }), errc::parse_error);
}

TEST(ReducedRatio, Values) {
  EXPECT_EQ(reduced_ratio(40, 120), "1/3");
  EXPECT_EQ(reduced_ratio(24, 24), "1");
  EXPECT_EQ(reduced_ratio(0, 6), "0");
}
