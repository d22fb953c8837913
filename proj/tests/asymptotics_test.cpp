#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eulerzeros/asymptotics.hpp"

namespace eulerzeros {
namespace {

Rational q(long num, long den = 1) { return {BigInt(num), BigInt(den)}; }

Rational ten_pow_neg(unsigned k) { return {BigInt(1), pow(BigInt(10), k)}; }

// Written with atanh instead of the log ratio.
double cdf_oracle(double x) {
  using std::numbers::pi;
  return 2.0 / pi * std::atan(2.0 * std::atanh(std::sqrt(x)) / pi);
}

TEST(ExtremeGap, SmallestCasesBracketExactGaps) {
  const Rational w = default_rel_width();
  EXPECT_TRUE(extreme_gap(FamilyKind::LambdaTilde, 2, w).contains(q(1, 3)));
  EXPECT_TRUE(extreme_gap(FamilyKind::XiTilde, 2, w).contains(q(1, 6)));
  EXPECT_TRUE(
      direct_extreme_gap(FamilyKind::LambdaTilde, 2, w).contains(q(1, 3)));
}

TEST(ExtremeGap, XiGapIsSmaller) {
  const Rational w = default_rel_width();
  EXPECT_LT(extreme_gap(FamilyKind::XiTilde, 10, w).hi(),
            extreme_gap(FamilyKind::LambdaTilde, 10, w).lo());
}

TEST(ExtremeGap, TwoRoutesIntersect) {
  const Rational w = default_rel_width();
  for (FamilyKind kind : {FamilyKind::XiTilde, FamilyKind::LambdaTilde}) {
    for (unsigned n = 2; n <= kTwoRouteMaxN; ++n) {
      EXPECT_TRUE(extreme_gap(kind, n, w).intersects(
          direct_extreme_gap(kind, n, w)))
          << to_string(kind) << " n=" << n;
    }
  }
}

TEST(Rate, Examples) {
  const Rational w = default_rel_width();
  EXPECT_NEAR(rate(FamilyKind::XiTilde, 10, w).rate, -2.165, 1e-3);
  EXPECT_NEAR(rate(FamilyKind::LambdaTilde, 10, w).rate, -1.386, 1e-3);
  const RateRecord r2 = rate(FamilyKind::LambdaTilde, 2, w);
  EXPECT_NEAR(r2.rate, -std::log(3.0), 1e-9);
  EXPECT_LT(r2.rate_error, 1e-6);
  EXPECT_NEAR(rate(FamilyKind::XiTilde, 2, w).rate, -std::log(6.0), 1e-9);
}

TEST(Rate, Errors) {
  EXPECT_THROW(rate(FamilyKind::XiTilde, 1, default_rel_width()), DomainError);
  EXPECT_THROW(rate(FamilyKind::XiTilde, 10, q(1, 10)), DomainError);
}

TEST(LemmaBoundsCheck, Examples) {
  const LemmaVerdict l2 = lemma_bounds_check(FamilyKind::LambdaTilde, 2);
  EXPECT_EQ(l2.c1, 11);
  EXPECT_EQ(l2.lower, q(1, 11));
  EXPECT_EQ(l2.upper, q(3, 11));
  EXPECT_TRUE(l2.holds);
  const LemmaVerdict x2 = lemma_bounds_check(FamilyKind::XiTilde, 2);
  EXPECT_EQ(x2.c1, 23);
  EXPECT_EQ(x2.lower, q(1, 23));
  EXPECT_EQ(x2.upper, q(3, 23));
  EXPECT_TRUE(x2.holds);
}

TEST(LemmaBoundsCheck, HoldsThroughThirty) {
  for (FamilyKind kind : {FamilyKind::XiTilde, FamilyKind::LambdaTilde}) {
    for (unsigned n = 2; n <= 30; ++n) {
      const LemmaVerdict v = lemma_bounds_check(kind, n);
      EXPECT_TRUE(v.holds) << to_string(kind) << " n=" << n;
      EXPECT_LE(v.lower, v.a_enclosure.lo());
      EXPECT_GE(v.upper, v.a_enclosure.hi());
    }
  }
}

TEST(LimitingCdf, Examples) {
  const double half_point = std::pow(std::tanh(std::numbers::pi / 2), 2);
  EXPECT_NEAR(limiting_cdf(half_point), 0.5, 1e-12);
  EXPECT_LT(limiting_cdf(1e-12), 1e-5);
  EXPECT_GT(limiting_cdf(1.0 - 1e-12), 0.9);
  EXPECT_THROW(limiting_cdf(0.0), DomainError);
  EXPECT_THROW(limiting_cdf(1.0), DomainError);
  EXPECT_THROW(limiting_cdf(Rational(1)), DomainError);
}

TEST(LimitingCdf, MatchesOracleAndIsMonotone) {
  double previous = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0;
    const double f = limiting_cdf(x);
    EXPECT_NEAR(f, cdf_oracle(x), 1e-12);
    EXPECT_NEAR(limiting_cdf(q(i, 1000)), f, 1e-12);
    EXPECT_GT(f, previous);
    previous = f;
  }
}

TEST(LimitingCdf, RationalOverloadNearOne) {
  const Rational x = Rational(1) - Rational(BigInt(1), pow(BigInt(10), 40));
  const double f = limiting_cdf(x);
  EXPECT_LT(f, 1.0);
  EXPECT_GT(f, 0.95);
}

TEST(EmpiricalDistance, SingleZeroCase) {
  const double f_lambda = cdf_oracle(2.0 / 3.0);
  EXPECT_NEAR(empirical_distance(FamilyKind::LambdaTilde, 2).sup_distance,
              std::max(f_lambda, 1.0 - f_lambda), 1e-9);
  EXPECT_NEAR(empirical_distance(FamilyKind::LambdaTilde, 2).sup_distance,
              0.598685, 1e-6);
  const double f_xi = cdf_oracle(5.0 / 6.0);
  EXPECT_NEAR(empirical_distance(FamilyKind::XiTilde, 2).sup_distance,
              std::max(f_xi, 1.0 - f_xi), 1e-9);
}

TEST(EmpiricalDistance, DecreasesWithN) {
  for (FamilyKind kind : {FamilyKind::XiTilde, FamilyKind::LambdaTilde}) {
    const double d10 = empirical_distance(kind, 10).sup_distance;
    const double d30 = empirical_distance(kind, 30).sup_distance;
    EXPECT_LT(d30, d10) << to_string(kind);
    EXPECT_GT(d30, 0.0);
  }
}

TEST(LeftEdge, Examples) {
  EXPECT_NEAR(left_edge_constant(), 6.08806818962515, 1e-12);
  const LeftEdgeReport r2 = left_edge_ratio(FamilyKind::LambdaTilde, 2, 1);
  EXPECT_TRUE(r2.zero.contains(q(2, 3)));
  EXPECT_NEAR(r2.ratio, 2.0 / 3.0, 1e-9);
  EXPECT_THROW(left_edge_ratio(FamilyKind::XiTilde, 5, 0), DomainError);
  EXPECT_THROW(left_edge_ratio(FamilyKind::XiTilde, 5, 5), DomainError);
}

TEST(LeftEdge, ApproachesConstant) {
  const double c = left_edge_constant();
  for (FamilyKind kind : {FamilyKind::XiTilde, FamilyKind::LambdaTilde}) {
    const double r10 = left_edge_ratio(kind, 10, 1).ratio;
    const double r30 = left_edge_ratio(kind, 30, 1).ratio;
    EXPECT_LT(std::abs(r30 - c), std::abs(r10 - c)) << to_string(kind);
  }
}

TEST(RateTable, SortedAndDeterministic) {
  const std::vector<unsigned> ns{12, 3, 7};
  const auto serial = rate_table(ns, default_rel_width(), 1);
  const auto parallel = rate_table(ns, default_rel_width(), 4);
  ASSERT_EQ(serial.size(), 6u);
  ASSERT_EQ(parallel.size(), 6u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].n, parallel[i].n);
    EXPECT_EQ(serial[i].kind, parallel[i].kind);
    EXPECT_EQ(serial[i].gap_enclosure, parallel[i].gap_enclosure);
    EXPECT_EQ(serial[i].rate, parallel[i].rate);
    if (i > 0) {
      EXPECT_LE(serial[i - 1].n, serial[i].n);
    }
  }
  EXPECT_EQ(serial.front().n, 3u);
  EXPECT_EQ(serial.front().kind, FamilyKind::XiTilde);
}

TEST(RateTable, EdgeCases) {
  EXPECT_TRUE(rate_table(std::span<const unsigned>{}, default_rel_width(), 2)
                  .empty());
  const std::vector<unsigned> ns{20};
  EXPECT_THROW(rate_table(ns, q(1, 10), 1), DomainError);
}

}  // namespace
}  // namespace eulerzeros
