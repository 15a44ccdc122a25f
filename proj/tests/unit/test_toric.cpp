#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "echcap/capacities.hpp"
#include "echcap/errors.hpp"
#include "echcap/toric.hpp"
#include "oracles.hpp"

using namespace echcap;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Norm hexagon_norm() { return Norm::polygonal({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }

}  // namespace

TEST(ToricCapacity, EuclideanSpectrumStart) {
  const double want[] = {0, 2, 2 + kSqrt2, 4};
  for (std::int64_t k = 0; k <= 3; ++k) {
    auto r = toric_capacity(Norm::euclidean(), k);
    EXPECT_NEAR(r.value.value(), want[k], 1e-9) << k;
    EXPECT_EQ(r.witness.lattice_point_count(), k + 1);
  }
  EXPECT_EQ(toric_capacity(Norm::euclidean(), 0).witness, LatticePolygon());
  EXPECT_EQ(toric_capacity(Norm::euclidean(), 1).value, CapacityValue(2));
  EXPECT_EQ(toric_capacity(Norm::euclidean(), 3).value, CapacityValue(4));
  EXPECT_EQ(toric_capacity(Norm::euclidean(), 3).witness,
            LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST(ToricCapacity, EuclideanMatchesSubsetBruteForce) {
  // The minimizer for k <= 5 has perimeter <= 6 and fits the oracle box.
  for (std::int64_t k = 0; k <= 5; ++k) {
    double best = 1e9;
    for (const auto& h : oracle::polygons_in_box(k + 1, 4)) best = std::min(best, oracle::euclidean_perimeter(h));
    EXPECT_NEAR(toric_capacity(Norm::euclidean(), k).value.value(), best, 1e-9) << k;
  }
}

TEST(ToricCapacity, TieBreakIsDeterministic) {
  auto r = toric_capacity(Norm::euclidean(), 1);
  EXPECT_EQ(r.tied_candidates, 2u);
  EXPECT_EQ(r.witness, LatticePolygon::from_vertices({{0, 0}, {0, 1}}));
  auto r2 = toric_capacity(Norm::euclidean(), 2);
  EXPECT_GT(r2.tied_candidates, 1u);
  EXPECT_EQ(r2.witness.vertices().size(), 3u);
  EXPECT_EQ(toric_capacity(Norm::euclidean(), 2).witness, r2.witness);
}

TEST(ToricCapacity, WeightedL1EqualsPolydisk) {
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {1, 1}, {1, 2}, {3, 1}, {Rational(3, 2), 1}, {Rational(2, 3), Rational(5, 4)}};
  for (const auto& [a, b] : pairs) {
    auto want = polydisk_capacities(a, b, 20);
    auto got = toric_capacities(Norm::weighted_l1(a, b), 20);
    EXPECT_EQ(got, want) << a << "," << b;
  }
}

TEST(ToricCapacity, MonotoneInK) {
  for (const auto& n : {Norm::euclidean(), hexagon_norm(), Norm::weighted_l1(Rational(5, 2), 1)}) {
    auto seq = toric_capacities(n, 25);  // the constructor rejects a decrease
    EXPECT_EQ(seq.kmax(), 25);
  }
}

TEST(ToricCapacity, WitnessAchievesValue) {
  for (const auto& n : {Norm::euclidean(), hexagon_norm(), Norm::weighted_l1(2, Rational(1, 3))}) {
    for (std::int64_t k = 0; k <= 15; ++k) {
      auto r = toric_capacity(n, k);
      EXPECT_EQ(r.witness.lattice_point_count(), k + 1);
      EXPECT_EQ(r.witness.perimeter(n), r.value);
    }
  }
}

TEST(ToricCapacity, SeedIsFeasibleAndNotBelowOptimum) {
  for (std::int64_t k = 0; k <= 30; ++k) {
    auto seed = toric_seed_polygon(Norm::euclidean(), k);
    EXPECT_EQ(seed.lattice_point_count(), k + 1);
    if (k <= 20) {
      auto opt = toric_capacity(Norm::euclidean(), k).value;
      EXPECT_NE(compare(seed.perimeter(Norm::euclidean()), opt), Comparison::Less);
    }
  }
}

TEST(ToricCapacity, ErrorsAndOptions) {
  EXPECT_THROW(toric_capacity(Norm::euclidean(), -1), InvalidArgument);
  ToricOptions tiny;
  tiny.node_limit = 3;
  EXPECT_THROW(toric_capacity(Norm::euclidean(), 10, tiny), ToricEnumerationBudgetExceeded);
  ToricOptions loose;
  loose.count_rule = CountRule::AtLeast;
  for (std::int64_t k = 0; k <= 10; ++k) {
    auto relaxed = toric_capacity(Norm::euclidean(), k, loose).value;
    auto exact = toric_capacity(Norm::euclidean(), k).value;
    EXPECT_NE(compare(relaxed, exact), Comparison::Greater);
  }
}

TEST(Generators, GradingKnownValues) {
  EXPECT_EQ(generator_grading(LabeledGenerator(LatticePolygon(), {})), 0);
  auto sq = LabeledGenerator::all_e(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(generator_grading(sq), 6);
  LabeledGenerator tri(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}),
                       {EdgeLabel::e, EdgeLabel::h, EdgeLabel::e});
  EXPECT_EQ(tri.h_count(), 1u);
  EXPECT_EQ(generator_grading(tri), 3);
  EXPECT_THROW(LabeledGenerator(LatticePolygon(), {EdgeLabel::h}), InvalidArgument);
  EXPECT_THROW(LabeledGenerator(LatticePolygon::from_vertices({{0, 0}, {2, 1}}), {EdgeLabel::h}), InvalidArgument);
}

TEST(Generators, ActionKnownValues) {
  EXPECT_EQ(generator_action(LabeledGenerator::all_e(LatticePolygon()), Norm::euclidean()), CapacityValue(0));
  auto hex = hexagon_norm();
  auto seg = LabeledGenerator::all_e(LatticePolygon::from_vertices({{0, 0}, {2, 1}}));
  EXPECT_EQ(generator_action(seg, hex), Rational(2) * hex.length({2, 1}));
  auto sq = LabeledGenerator::all_e(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(generator_action(sq, Norm::euclidean()), CapacityValue(4));
}

TEST(Generators, ReebOrbitData) {
  auto [d, a] = reeb_orbit_data(Norm::euclidean(), 1, 0);
  EXPECT_EQ(a, CapacityValue(1));
  EXPECT_NEAR(d.cos_theta, 1.0, 1e-15);
  EXPECT_NEAR(d.sin_theta, 0.0, 1e-15);
  auto [d2, a2] = reeb_orbit_data(Norm::euclidean(), 1, 1);
  EXPECT_NEAR(a2.value(), kSqrt2, 1e-15);
  EXPECT_NEAR(d2.cos_theta, 1 / kSqrt2, 1e-15);
  auto [d3, a3] = reeb_orbit_data(Norm::weighted_l1(Rational(7, 3), 2), 1, 0);
  EXPECT_EQ(a3, CapacityValue(Rational(7, 6)));
  EXPECT_THROW(reeb_orbit_data(Norm::euclidean(), 2, 4), NotPrimitive);
  EXPECT_THROW(reeb_orbit_data(Norm::euclidean(), 0, 0), NotPrimitive);
}

TEST(Generators, MinActionKnownValues) {
  auto g0 = min_action_at_grading(Norm::euclidean(), 0, CapacityValue(1));
  EXPECT_EQ(g0.value, CapacityValue(0));
  auto g2 = min_action_at_grading(Norm::euclidean(), 2, CapacityValue(3));
  EXPECT_EQ(g2.value, CapacityValue(2));
  auto g4 = min_action_at_grading(Norm::euclidean(), 4, CapacityValue(4));
  EXPECT_NEAR(g4.value.value(), 2 + kSqrt2, 1e-12);
  ASSERT_TRUE(g4.witness.has_value());
  EXPECT_EQ(generator_grading(*g4.witness), 4);
  EXPECT_EQ(min_action_at_grading(Norm::euclidean(), 4, CapacityValue(1)).value, CapacityValue::infinity());
  EXPECT_THROW(min_action_at_grading(Norm::euclidean(), 3, CapacityValue(4)), InvalidArgument);
  EXPECT_THROW(min_action_at_grading(Norm::euclidean(), -2, CapacityValue(4)), InvalidArgument);
}

TEST(Generators, GradingStratifiedMinimumIsTheCapacity) {
  for (const auto& n : {Norm::euclidean(), Norm::weighted_l1(Rational(3, 2), 1), hexagon_norm()}) {
    for (std::int64_t k = 0; k <= 12; ++k) {
      auto cap = toric_capacity(n, k).value;
      auto m = min_action_at_grading(n, 2 * k, cap);
      ASSERT_TRUE(m.witness.has_value()) << k;
      EXPECT_EQ(generator_grading(*m.witness), 2 * k);
      if (n.is_exact()) {
        EXPECT_EQ(m.value, cap) << n.describe() << " k=" << k;
      } else {
        EXPECT_NEAR(m.value.value(), cap.value(), 1e-9) << k;
      }
    }
  }
}
