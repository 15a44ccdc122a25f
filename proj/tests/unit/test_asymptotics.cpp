#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "echcap/asymptotics.hpp"
#include "echcap/errors.hpp"

using namespace echcap;

TEST(Volume, KnownValues) {
  EXPECT_EQ(volume(Domain::ellipsoid(3, Rational(5, 2))), CapacityValue(Rational(15, 4)));
  EXPECT_EQ(volume(Domain::ball(Rational(2, 3))), CapacityValue(Rational(2, 9)));
  EXPECT_EQ(volume(Domain::polydisk(3, Rational(5, 2))), CapacityValue(Rational(15, 2)));
  auto t = volume(Domain::toric(Norm::euclidean()));
  EXPECT_TRUE(t.is_approx());
  EXPECT_NEAR(t.value(), std::numbers::pi, 1e-15);
  EXPECT_EQ(volume(Domain::toric(Norm::weighted_l1(2, 3))), CapacityValue(6));
  auto hex = Norm::polygonal({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  EXPECT_EQ(volume(Domain::toric(hex)), hex.dual_ball_area());
  EXPECT_TRUE(volume(Domain::toric(hex)).is_exact());
}

TEST(Volume, UnionIsAdditive) {
  auto u = Domain::disjoint_union({Domain::ball(1), Domain::ellipsoid(1, 2), Domain::polydisk(Rational(1, 2), 3)});
  EXPECT_EQ(volume(u), CapacityValue(Rational(1, 2) + Rational(1) + Rational(3, 2)));
}

TEST(Trace, BallAtThresholds) {
  for (std::int64_t d = 1; d <= 40; ++d) {
    const std::int64_t k = (d * d + 3 * d) / 2;
    auto r = volume_ratio_trace(Domain::ball(1), k, k);
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_DOUBLE_EQ(r.trace[0].ratio, static_cast<double>(d * d) / static_cast<double>(d * d + 3 * d));
  }
}

TEST(Trace, ConvergesForModelDomains) {
  const std::vector<std::pair<Domain, double>> cases = {
      {Domain::ball(1), 0.05},
      {Domain::ellipsoid(1, 2), 0.05},
      {Domain::polydisk(2, 1), 0.05},
      {Domain::disjoint_union({Domain::ball(1), Domain::ball(1)}), 0.07},
  };
  for (const auto& [d, tol] : cases) {
    auto r = volume_ratio_trace(d, 10000, 1000);
    EXPECT_EQ(r.trace.size(), 10u);
    EXPECT_EQ(r.trace.back().k, 10000);
    EXPECT_NEAR(r.final_ratio, 1.0, tol) << d.describe();
    EXPECT_LE(r.max_deviation_last_decade, tol);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.vol_y, Rational(2) * r.vol_x);
  }
}

TEST(Trace, Labels) {
  auto t = volume_ratio_trace(Domain::toric(Norm::euclidean()), 20, 5);
  EXPECT_TRUE(t.truncated);
  EXPECT_EQ(t.trace.size(), 4u);
  EXPECT_TRUE(volume_ratio_trace(Domain::polydisk(1, 1), 10, 3).exploratory);
  EXPECT_EQ(volume_ratio_trace(Domain::polydisk(1, 1), 10, 3).trace.back().k, 10);
  EXPECT_FALSE(volume_ratio_trace(Domain::ball(1), 10, 3).exploratory);
  EXPECT_THROW(volume_ratio_trace(Domain::ball(1), 0, 1), InvalidArgument);
  EXPECT_THROW(volume_ratio_trace(Domain::ball(1), 10, 0), InvalidArgument);
}

TEST(Trace, EuclideanToricTrendAndPickBound) {
  auto r = volume_ratio_trace(Domain::toric(Norm::euclidean()), 20, 1);
  ASSERT_EQ(r.trace.size(), 20u);
  for (const auto& p : r.trace) {
    const double l = p.capacity.value() + p.capacity.error();
    EXPECT_GE(l * l, 4 * std::numbers::pi * (static_cast<double>(p.k) - l / 2)) << p.k;
    EXPECT_LT(p.ratio, 1.0);
  }
  EXPECT_LT(r.trace[0].ratio, r.trace[19].ratio);
}

TEST(Qw, KnownValues) {
  EXPECT_EQ(qw_check(Domain::ball(1), 2000).status, QwResult::Status::HoldsUpTo);
  auto e = qw_check(Domain::ellipsoid(1, 2), 1000);
  EXPECT_EQ(e.status, QwResult::Status::HoldsUpTo);
  EXPECT_EQ(e.k, 1000);
  auto p = qw_check(Domain::polydisk(1, 1), 1000);
  EXPECT_TRUE(p.exploratory);
  EXPECT_FALSE(e.exploratory);
  EXPECT_THROW(qw_check(Domain::ball(1), 0), InvalidArgument);
}

TEST(Qw, EllipsoidFamily) {
  for (const Rational& t : {Rational(1), Rational(3, 2), Rational(2), Rational(5), Rational(10)}) {
    for (const Rational& b : {Rational(1), Rational(2, 3)}) {
      auto r = qw_check(Domain::ellipsoid(t * b, b), 1000);
      EXPECT_EQ(r.status, QwResult::Status::HoldsUpTo) << t << " k=" << r.k;
    }
  }
}

TEST(Qw, ToricEuclidean) {
  EXPECT_EQ(qw_check(Domain::toric(Norm::euclidean()), 15).status, QwResult::Status::HoldsUpTo);
}

TEST(Weinstein, KnownValues) {
  auto b = weinstein_bound(Domain::ball(1));
  EXPECT_NEAR(b.bound.value(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b.square, CapacityValue(2));
  EXPECT_EQ(b.c1, CapacityValue(1));
  EXPECT_TRUE(b.c1_below);

  auto e = weinstein_bound(Domain::ellipsoid(1, 4));
  EXPECT_EQ(e.square, CapacityValue(8));
  EXPECT_EQ(e.c1, CapacityValue(1));
  EXPECT_TRUE(e.c1_below);

  // vol(X) = pi for the Euclidean toric domain, so 2 vol(Y) = 4 pi.
  auto t = weinstein_bound(Domain::toric(Norm::euclidean()));
  EXPECT_NEAR(t.bound.value(), std::sqrt(4 * std::numbers::pi), 1e-12);
  EXPECT_EQ(t.c1, CapacityValue(2));
  EXPECT_TRUE(t.c1_below);
}

TEST(Weinstein, HoldsAcrossModels) {
  for (const auto& d : {Domain::ellipsoid(1, 9), Domain::polydisk(1, 1), Domain::polydisk(5, 1),
                        Domain::ball(Rational(1, 3)), Domain::toric(Norm::weighted_l1(1, 3))}) {
    EXPECT_TRUE(weinstein_bound(d).c1_below) << d.describe();
  }
}
