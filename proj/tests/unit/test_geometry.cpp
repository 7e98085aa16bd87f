#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shortcut/fixtures.hpp"
#include "shortcut/geometry.hpp"

using namespace shortcut;
namespace fx = shortcut::fixtures;
constexpr double pi = std::numbers::pi;

namespace {

Polygon unit_square() { return fx::rectangle(0, 0, 1, 1); }

}  // namespace

TEST(Polygon, RejectsTooFewVertices) {
  EXPECT_THROW(Polygon({{0, 0}, {1, 0}}), Error);
}

TEST(Polygon, RejectsBowTie) {
  EXPECT_THROW(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), Error);
}

TEST(Polygon, RejectsRepeatedVertexAndZeroArea) {
  EXPECT_THROW(Polygon({{0, 0}, {0, 0}, {1, 0}, {1, 1}}), Error);
  EXPECT_THROW(Polygon({{0, 0}, {1, 0}, {2, 0}}), Error);
}

TEST(Polygon, ClockwiseInputIsReversed) {
  const Polygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(signed_area(p.vertices()), 0);
  EXPECT_DOUBLE_EQ(p.area(), 1.0);
  EXPECT_DOUBLE_EQ(p.perimeter(), 4.0);
}

TEST(InteriorAngle, SquareCornersAreRight) {
  const Polygon sq = fx::rectangle(0, 0, 10, 10);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(interior_angle(sq, i), pi / 2, 1e-12);
}

TEST(InteriorAngle, PlusInnerCornersAreReflex) {
  const Polygon plus = fx::plus_sign(40, 50);
  int reflex = 0;
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (std::abs(interior_angle(plus, i) - 1.5 * pi) < 1e-12) ++reflex;
  EXPECT_EQ(reflex, 4);
}

TEST(InteriorAngle, RegularHexagon) {
  const Polygon hex = fx::regular_polygon(6, 10);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(interior_angle(hex, i), 2 * pi / 3, 1e-12);
}

TEST(InteriorAngle, SumOverRandomStarsIsPolygonFormula) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8 + rng() % 53;
    const Polygon p = fx::random_star(rng, n, 100);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += interior_angle(p, i);
    const double expected = (double(p.size()) - 2) * pi;
    EXPECT_NEAR(sum / expected, 1.0, 1e-6);
  }
}

TEST(PointInPolygon, UnitSquare) {
  EXPECT_EQ(point_in_polygon(unit_square(), {0.5, 0.5}), Location::inside);
  EXPECT_EQ(point_in_polygon(unit_square(), {2, 2}), Location::outside);
  EXPECT_EQ(point_in_polygon(unit_square(), {0.5, 0}), Location::boundary);
}

TEST(SegmentInside, ConvexPolygonBoundaryPoints) {
  const Polygon hex = fx::regular_polygon(6, 30, {50, 50});
  for (std::size_t i = 0; i < hex.size(); ++i)
    for (std::size_t j = 0; j < hex.size(); ++j) EXPECT_TRUE(segment_inside(hex, hex[i], hex[j]));
}

TEST(SegmentInside, UArmTipsSpanTheNotch) {
  const Polygon u = fx::u_shape(110, 120, 30, 40);
  // Outer top corners of the two arms.
  const Point left_tip{0, 120}, right_tip{110, 120};
  EXPECT_EQ(point_in_polygon(u, (left_tip + right_tip) * 0.5), Location::outside);
  EXPECT_FALSE(segment_inside(u, left_tip, right_tip));
}

TEST(SegmentInside, DegenerateSegmentIsInside) {
  const Polygon sq = fx::rectangle(0, 0, 10, 10);
  EXPECT_TRUE(segment_inside(sq, {0, 5}, {0, 5}));
}

TEST(SegmentInside, SymmetricOnRandomStars) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Polygon p = fx::random_star(rng, 8 + rng() % 30, 80);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        EXPECT_EQ(segment_inside(p, p[i], p[j]), segment_inside(p, p[j], p[i]));
  }
}

TEST(MinEnclosingDisk, SquareCorners) {
  const std::vector<Point> pts{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  const Disk d = min_enclosing_disk(pts);
  EXPECT_NEAR(d.radius, 5 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(d.center.x, 5, 1e-12);
  EXPECT_NEAR(d.center.y, 5, 1e-12);
}

TEST(MinEnclosingDisk, TwoPoints) {
  const std::vector<Point> pts{{1, 2}, {4, 6}};
  EXPECT_NEAR(min_enclosing_disk(pts).radius, 2.5, 1e-12);
}

TEST(MinEnclosingDisk, EmptyInputThrows) {
  EXPECT_THROW(min_enclosing_disk(std::vector<Point>{}), Error);
}

TEST(MinEnclosingDisk, MatchesBruteForceOnRandomSets) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> pts(50);
    for (Point& p : pts) p = {u(rng), u(rng)};
    const double expected = oracle::brute_force_min_radius(pts);
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const Disk d = min_enclosing_disk(pts, seed);
      EXPECT_NEAR(d.radius, expected, 1e-9 * expected) << "trial " << trial << " seed " << seed;
    }
  }
}

TEST(MinEnclosingDisk, ContainsAllAndOnlySupportPointsMatter) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 50);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> pts(12);
    for (Point& p : pts) p = {u(rng), u(rng)};
    const Disk d = min_enclosing_disk(pts);
    const double eps = 1e-6 * 100;
    for (const Point& p : pts) EXPECT_TRUE(d.contains(p, eps));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::vector<Point> rest = pts;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const Disk r = min_enclosing_disk(rest);
      const bool on_circle = std::abs(distance(pts[k], d.center) - d.radius) < 1e-9 * d.radius;
      if (!on_circle) EXPECT_NEAR(r.radius, d.radius, 1e-9 * d.radius);
      else EXPECT_LE(r.radius, d.radius + 1e-9 * d.radius);
    }
  }
}

TEST(SegmentsConflict, Examples) {
  const double eps = 1e-9;
  EXPECT_TRUE(segments_conflict({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, eps));
  EXPECT_FALSE(segments_conflict({{0, 0}, {2, 0}}, {{0, 1}, {2, 1}}, eps));
  EXPECT_FALSE(segments_conflict({{0, 0}, {2, 0}}, {{2, 0}, {3, 5}}, eps));
}

TEST(SegmentsConflict, CollinearOverlap) {
  EXPECT_TRUE(segments_conflict({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}, 1e-9));
  EXPECT_FALSE(segments_conflict({{0, 0}, {2, 0}}, {{2, 0}, {6, 0}}, 1e-9));
}

TEST(SegmentsConflict, SymmetricOnRandomSegments) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(0, 6);  // coarse grid hits touching cases
  for (int trial = 0; trial < 5000; ++trial) {
    const Segment s1{{double(u(rng)), double(u(rng))}, {double(u(rng)), double(u(rng))}};
    const Segment s2{{double(u(rng)), double(u(rng))}, {double(u(rng)), double(u(rng))}};
    EXPECT_EQ(segments_conflict(s1, s2, 1e-9), segments_conflict(s2, s1, 1e-9));
  }
}

TEST(ArcDistance, UnitSquare) {
  const Polygon sq = unit_square();
  EXPECT_NEAR(arc_distance(sq, {0, 0}, {1, 0}), 1, 1e-12);
  EXPECT_NEAR(arc_distance(sq, {0.3, 0}, {0.3, 0}), 0, 1e-12);
  EXPECT_NEAR(arc_distance(sq, {0, 0}, {1, 1}), 2, 1e-12);
}

TEST(ArcDistance, OffBoundaryThrows) {
  EXPECT_THROW(arc_distance(unit_square(), {0.5, 0.5}, {0, 0}), Error);
}
