#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "echcap/errors.hpp"
#include "echcap/lattice_polygon.hpp"
#include "echcap/norm.hpp"
#include "echcap/polygon_enumeration.hpp"
#include "oracles.hpp"

using namespace echcap;

namespace {

const double kSqrt2 = std::sqrt(2.0);

LatticePolygon unit_square() { return LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
LatticePolygon unit_triangle() { return LatticePolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}); }

Norm hexagon_norm() {
  return Norm::polygonal({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}
Norm octagon_norm() {
  return Norm::polygonal({{2, 0},
                          {Rational(3, 2), Rational(3, 2)},
                          {0, 2},
                          {Rational(-3, 2), Rational(3, 2)},
                          {-2, 0},
                          {Rational(-3, 2), Rational(-3, 2)},
                          {0, -2},
                          {Rational(3, 2), Rational(-3, 2)}});
}
Norm square_norm() { return Norm::polygonal({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

std::vector<Norm> exact_norms() {
  return {Norm::weighted_l1(1, 1), Norm::weighted_l1(Rational(3, 2), Rational(2, 5)), hexagon_norm(),
          octagon_norm(), square_norm()};
}

}  // namespace

TEST(LatticePolygon, Canonicalization) {
  auto p = LatticePolygon::from_vertices({{3, 5}, {2, 6}, {2, 5}});
  EXPECT_EQ(p.vertices(), (std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}}));
  auto q = LatticePolygon::from_vertices({{5, 5}, {6, 5}, {6, 6}, {5, 6}});
  EXPECT_EQ(q, unit_square());
  EXPECT_EQ(LatticePolygon::from_vertices({{4, 4}}), LatticePolygon());
  auto seg = LatticePolygon::from_vertices({{2, 1}, {1, 3}});
  EXPECT_EQ(seg.degeneracy(), LatticePolygon::Degeneracy::Segment);
  EXPECT_EQ(seg.vertices().front(), (LatticePoint{0, 0}));
}

TEST(LatticePolygon, RejectsInvalidInput) {
  EXPECT_THROW(LatticePolygon::from_vertices({}), InvalidArgument);
  EXPECT_THROW(LatticePolygon::from_vertices({{0, 0}, {0, 1}, {1, 0}}), InvalidArgument);          // clockwise
  EXPECT_THROW(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), InvalidArgument);  // collinear
  EXPECT_THROW(LatticePolygon::from_vertices({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), InvalidArgument);  // self-crossing
  EXPECT_THROW(LatticePolygon::from_vertices({{0, 0}, {0, 0}}), InvalidArgument);
  std::vector<EdgeRun> open{{{1, 0}, 1}, {{0, 1}, 1}};
  EXPECT_THROW(LatticePolygon::from_edge_runs(open), InvalidArgument);
  std::vector<EdgeRun> not_primitive{{{2, 0}, 1}, {{-1, 0}, 2}};
  EXPECT_THROW(LatticePolygon::from_edge_runs(not_primitive), InvalidArgument);
}

TEST(LatticePolygon, FromEdgeRuns) {
  std::vector<EdgeRun> runs{{{1, 0}, 2}, {{0, 1}, 1}, {{-1, 0}, 2}, {{0, -1}, 1}};
  auto p = LatticePolygon::from_edge_runs(runs);
  EXPECT_EQ(p.vertices(), (std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
  std::vector<EdgeRun> seg{{{1, 1}, 3}, {{-1, -1}, 3}};
  auto s = LatticePolygon::from_edge_runs(seg);
  EXPECT_EQ(s.degeneracy(), LatticePolygon::Degeneracy::Segment);
  EXPECT_EQ(s.lattice_point_count(), 4);
  EXPECT_EQ(LatticePolygon::from_edge_runs({}), LatticePolygon());
}

TEST(LatticePolygon, CountsKnownValues) {
  EXPECT_EQ(LatticePolygon().lattice_point_count(), 1);
  EXPECT_EQ(unit_square().lattice_point_count(), 4);
  EXPECT_EQ(unit_triangle().lattice_point_count(), 3);
  EXPECT_EQ(LatticePolygon().area(), Rational(0));
  EXPECT_EQ(unit_square().area(), Rational(1));
  EXPECT_EQ(LatticePolygon::from_vertices({{0, 0}, {2, 0}, {0, 2}}).area(), Rational(2));
  EXPECT_EQ(LatticePolygon::from_vertices({{0, 0}, {4, 2}}).area(), Rational(0));
  EXPECT_EQ(unit_square().edge_count(), 4u);
  EXPECT_EQ(LatticePolygon::from_vertices({{0, 0}, {3, 0}}).edge_count(), 2u);
  EXPECT_EQ(LatticePolygon().edge_count(), 0u);
}

TEST(LatticePolygon, PickMatchesBoundingBoxScan) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-10, 10);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<LatticePoint> pts;
    const int n = 1 + trial % 9;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    auto h = oracle::hull(pts);
    auto p = LatticePolygon::from_vertices(h);
    EXPECT_EQ(p.lattice_point_count(), oracle::scan_count(h)) << p.to_string();
    ++checked;
  }
  EXPECT_EQ(checked, 400);
}

TEST(LatticePolygon, PerimeterKnownValues) {
  for (const auto& n : exact_norms()) EXPECT_EQ(LatticePolygon().perimeter(n), CapacityValue(0));
  EXPECT_EQ(LatticePolygon().perimeter(Norm::euclidean()), CapacityValue(0));
  EXPECT_EQ(LatticePolygon::from_vertices({{0, 0}, {1, 0}}).perimeter(Norm::euclidean()), CapacityValue(2));
  const Rational a(5, 3), b(7, 2);
  EXPECT_EQ(unit_square().perimeter(Norm::weighted_l1(a, b)), CapacityValue(a + b));
  auto tri = unit_triangle().perimeter(Norm::euclidean());
  EXPECT_TRUE(tri.is_approx());
  EXPECT_NEAR(tri.value(), 2 + kSqrt2, 1e-12);
  EXPECT_LE(tri.error(), 1e-13);
  EXPECT_EQ(unit_triangle().to_string(), "[[0,0],[1,0],[0,1]]");
}

TEST(Norm, DualLengthKnownValues) {
  EXPECT_EQ(Norm::euclidean().dual_length({1, 0}), CapacityValue(1));
  const Rational a(4, 3), b(5);
  auto l1 = Norm::weighted_l1(a, b);
  EXPECT_EQ(l1.dual_length({Rational(7, 2), 0}), CapacityValue(Rational(7) / a));
  EXPECT_EQ(l1.dual_length({Rational(1, 2), Rational(-3)}),
            CapacityValue(max(Rational(1) / a, Rational(6) / b)));
  EXPECT_EQ(square_norm().dual_length({1, 1}), CapacityValue(1));
}

TEST(Norm, Basics) {
  auto l1 = Norm::weighted_l1(2, 4);
  EXPECT_EQ(l1.length({3, -1}), CapacityValue(5));
  EXPECT_EQ(Norm::euclidean().length({3, 4}), CapacityValue(5));
  EXPECT_TRUE(Norm::euclidean().length({1, 1}).is_approx());
  EXPECT_EQ(hexagon_norm().length({1, 1}), CapacityValue(1));
  EXPECT_EQ(hexagon_norm().length({1, -1}), CapacityValue(2));
  EXPECT_EQ(square_norm().length({2, -3}), CapacityValue(5));
  EXPECT_EQ(l1.unit_ball_area(), CapacityValue(Rational(1)));
  EXPECT_EQ(l1.dual_ball_area(), CapacityValue(8));
  EXPECT_NEAR(Norm::euclidean().dual_ball_area().value(), std::numbers::pi, 1e-15);
  EXPECT_THROW(Norm::weighted_l1(0, 1), InvalidArgument);
  EXPECT_THROW(Norm::polygonal({{1, 0}, {0, 1}, {-1, 0}}), InvalidArgument);
  EXPECT_THROW(Norm::polygonal({{1, 0}, {0, 1}, {-1, 0}, {0, -2}}), InvalidArgument);
  EXPECT_THROW(Norm::polygonal({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {0, 1}}), InvalidArgument);
  EXPECT_EQ(Norm::euclidean().describe(), "euclidean");
  EXPECT_EQ(Norm::weighted_l1(Rational(3, 2), 1).describe(), "l1:3/2,1");
  EXPECT_EQ(square_norm().describe(), "poly:[[1,0],[0,1],[-1,0],[0,-1]]");
}

TEST(Norm, SymmetricAndHomogeneous) {
  for (const auto& n : exact_norms()) {
    for (std::int64_t x = -4; x <= 4; ++x) {
      for (std::int64_t y = -4; y <= 4; ++y) {
        auto v = n.length({x, y});
        EXPECT_EQ(v, n.length({-x, -y}));
        EXPECT_EQ(n.length({3 * x, 3 * y}), Rational(3) * v);
        if (x != 0 || y != 0) EXPECT_GT(v.rational(), Rational(0));
      }
    }
  }
}

TEST(Norm, DualOfDualIsTheOriginal) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::vector<LatticePoint> tests;
  while (tests.size() < 50) tests.push_back({coord(rng), coord(rng)});
  for (const auto& n : {hexagon_norm(), octagon_norm(), square_norm(),
                        Norm::polygonal({{3, 1}, {-1, 2}, {-3, -1}, {1, -2}})}) {
    Norm dd = n.dual().dual();
    for (const auto& v : tests) {
      EXPECT_EQ(dd.length(v), n.length(v));
      EXPECT_EQ(n.dual().length(v), n.dual_length({v.x, v.y}));
    }
  }
  EXPECT_EQ(Norm::euclidean().dual(), Norm::euclidean());
}

TEST(Norm, PathLengthTracksError) {
  std::vector<LatticePoint> edges{{1, 1}, {1, 2}, {3, 4}, {-5, -7}};
  auto len = Norm::euclidean().path_length(edges);
  double want = kSqrt2 + std::sqrt(5.0) + 5 + std::sqrt(74.0);
  EXPECT_NEAR(len.value(), want, len.error());
  EXPECT_GT(len.error(), 0.0);
  EXPECT_LT(len.error(), 1e-12);
}

TEST(Enumeration, KnownValues) {
  auto point = enumerate_polygons(1, Norm::euclidean(), CapacityValue(0));
  ASSERT_EQ(point.size(), 1u);
  EXPECT_EQ(point[0], LatticePolygon());

  auto segs = enumerate_polygons(2, Norm::euclidean(), CapacityValue(2));
  EXPECT_EQ(segs, (std::vector<LatticePolygon>{LatticePolygon::from_vertices({{0, 0}, {0, 1}}),
                                               LatticePolygon::from_vertices({{0, 0}, {1, 0}})}));

  auto tri = enumerate_polygons(3, Norm::euclidean(), CapacityValue::approx(2 + kSqrt2, 1e-15));
  EXPECT_NE(std::find(tri.begin(), tri.end(), unit_triangle()), tri.end());
  EXPECT_THROW(enumerate_polygons(0, Norm::euclidean(), CapacityValue(3)), InvalidArgument);
  EXPECT_THROW(enumerate_polygons(3, Norm::euclidean(), CapacityValue::infinity()), InvalidArgument);
}

TEST(Enumeration, NodeLimit) {
  EnumerationOptions o;
  o.node_limit = 10;
  try {
    enumerate_polygons(8, Norm::euclidean(), CapacityValue(9), o);
    FAIL() << "expected budget exception";
  } catch (const ToricEnumerationBudgetExceeded& e) {
    EXPECT_GT(e.nodes(), 10u);
  }
}

TEST(Enumeration, CompleteAgainstSubsetBruteForce) {
  // Budgets <= 8 keep every qualifying polygon inside the oracle box.
  const std::vector<std::pair<std::int64_t, double>> cases = {{1, 0.0}, {2, 4.0}, {3, 5.0}, {4, 6.5}, {5, 7.0}, {6, 8.0}};
  for (const auto& [count, budget] : cases) {
    std::vector<std::vector<LatticePoint>> want;
    for (auto& h : oracle::polygons_in_box(count, 4)) {
      if (oracle::euclidean_perimeter(h) <= budget + 1e-9) want.push_back(h);
    }
    auto got = enumerate_polygons(count, Norm::euclidean(), CapacityValue::approx(budget, 0.0));
    std::vector<std::vector<LatticePoint>> got_vertices;
    for (const auto& p : got) got_vertices.push_back(p.vertices());
    std::sort(got_vertices.begin(), got_vertices.end());
    EXPECT_EQ(got_vertices, want) << "count " << count;
    EXPECT_FALSE(want.empty());
  }
}

TEST(Enumeration, ExactNormsAgainstSubsetBruteForce) {
  // Every polygon here has sup-norm diameter <= 4 once the L1 budget is 8.
  auto l1 = Norm::weighted_l1(2, 2);
  for (std::int64_t count = 1; count <= 5; ++count) {
    std::vector<std::vector<LatticePoint>> want;
    for (auto& h : oracle::polygons_in_box(count, 4)) {
      if (LatticePolygon::from_vertices(h).perimeter(l1).rational() <= Rational(8)) want.push_back(h);
    }
    std::vector<std::vector<LatticePoint>> got;
    for (const auto& p : enumerate_polygons(count, l1, CapacityValue(8))) got.push_back(p.vertices());
    EXPECT_EQ(got, want) << "count " << count;
  }
}

TEST(Enumeration, AtLeastRuleIsASuperset) {
  auto exact = enumerate_polygons(4, Norm::euclidean(), CapacityValue(5));
  EnumerationOptions o;
  o.count_rule = CountRule::AtLeast;
  auto loose = enumerate_polygons(4, Norm::euclidean(), CapacityValue(5), o);
  for (const auto& p : exact) EXPECT_NE(std::find(loose.begin(), loose.end(), p), loose.end());
  for (const auto& p : loose) EXPECT_GE(p.lattice_point_count(), 4);
}

TEST(Enumeration, IsoperimetricInequality) {
  // perimeter^2 >= 4 A(W) area with W the dual unit ball (the Wulff shape).
  std::size_t seen = 0;
  for (const auto& n : exact_norms()) {
    const Rational w = n.dual_ball_area().rational();
    for (std::int64_t count = 3; count <= 9; ++count) {
      for (const auto& p : enumerate_polygons(count, n, Rational(3) * n.length({1, 0}).rational() + Rational(3) * n.length({0, 1}).rational())) {
        Rational per = p.perimeter(n).rational();
        EXPECT_GE(per * per, Rational(4) * w * p.area()) << p.to_string() << " " << n.describe();
        ++seen;
      }
    }
  }
  for (std::int64_t count = 3; count <= 12; ++count) {
    for (const auto& p : enumerate_polygons(count, Norm::euclidean(), CapacityValue(10))) {
      auto per = p.perimeter(Norm::euclidean());
      double lo = per.value() - per.error();
      EXPECT_GE(lo * lo, 4 * std::numbers::pi * p.area().to_double()) << p.to_string();
      ++seen;
    }
  }
  EXPECT_GT(seen, 1000u);
}
