#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "shortcut/dce.hpp"
#include "shortcut/fixtures.hpp"

using namespace shortcut;
namespace fx = shortcut::fixtures;
constexpr double pi = std::numbers::pi;
constexpr double kHuge = 1e300;

namespace {

bool is_subsequence(const Polygon& sub, const Polygon& full) {
  std::size_t j = 0;
  // The output keeps the input's cyclic order but may start elsewhere.
  const auto& f = full.vertices();
  const auto start = std::find(f.begin(), f.end(), sub[0]);
  if (start == f.end()) return false;
  std::size_t i = static_cast<std::size_t>(start - f.begin());
  for (std::size_t steps = 0; steps < f.size() && j < sub.size(); ++steps, i = (i + 1) % f.size())
    if (f[i] == sub[j]) ++j;
  return j == sub.size();
}

}  // namespace

TEST(Relevance, CollinearVertexIsZero) {
  const Polygon p({{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
  EXPECT_DOUBLE_EQ(dce::relevance(p, 1), 0.0);
}

TEST(Relevance, RightAngleWithEqualEdges) {
  // Right isosceles triangle: both legs have normalized length 1/(2 + sqrt 2).
  const Polygon tri({{0, 0}, {10, 0}, {0, 10}});
  const double ell = 1.0 / (2.0 + std::sqrt(2.0));
  EXPECT_NEAR(dce::relevance(tri, 0), (pi / 2) * ell / 2, 1e-15);
}

TEST(Relevance, SquareIsPiOverSixteen) {
  const Polygon sq = fx::rectangle(0, 0, 7, 7);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(dce::relevance(sq, i), pi / 16, 1e-15);
  EXPECT_NEAR(dce::relevance_score(sq, 0), 180.0 / 16.0, 1e-12);
}

TEST(Relevance, ConcaveTurnCountsLikeConvex) {
  const Polygon plus = fx::plus_sign(10, 10);
  // Outer corner 0 and inner corner 11 both turn by a right angle.
  EXPECT_NEAR(dce::relevance(plus, 0), dce::relevance(plus, 11), 1e-15);
}

TEST(DceConfig, Validation) {
  EXPECT_THROW((dce::DceConfig{0.0, 3}.validate()), Error);
  EXPECT_THROW((dce::DceConfig{-1.0, 3}.validate()), Error);
  EXPECT_THROW((dce::DceConfig{std::numeric_limits<double>::infinity(), 3}.validate()), Error);
  EXPECT_THROW((dce::DceConfig{0.5, 2}.validate()), Error);
  EXPECT_NO_THROW((dce::DceConfig{0.5, 3}.validate()));
}

TEST(Simplify, ConvexPolygonAboveThresholdUnchanged) {
  const Polygon hex = fx::regular_polygon(6, 40);
  EXPECT_EQ(dce::simplify(hex, {0.5, 3}), hex);
}

TEST(Simplify, MidpointOnSquareEdgeRemovedFirst) {
  const Polygon with_mid({{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
  const dce::Evolution ev = dce::evolve(with_mid, {0.5, 3});
  EXPECT_EQ(ev.polygon, fx::rectangle(0, 0, 10, 10));
  EXPECT_EQ(ev.source_index, (std::vector<std::size_t>{0, 2, 3, 4}));
}

TEST(Simplify, NoisyCircle) {
  std::mt19937_64 rng(1);
  const Polygon circle = fx::noisy_circle(rng, 200, 50, 1.0);
  const Polygon out = dce::simplify(circle, {0.5, 3});
  EXPECT_LT(out.size(), circle.size());
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_GE(dce::relevance_score(out, i), 0.5);
  // Frozen from a run of this implementation.
  EXPECT_EQ(out.size(), 12u);
}

TEST(Simplify, MinVerticesFloor) {
  std::mt19937_64 rng(2);
  const Polygon circle = fx::noisy_circle(rng, 100, 50, 1.0);
  EXPECT_EQ(dce::simplify(circle, {kHuge, 7}).size(), 7u);
}

TEST(Simplify, HugeThresholdOnConvexInputGivesTriangle) {
  EXPECT_EQ(dce::simplify(fx::regular_polygon(20, 30), {kHuge, 3}).size(), 3u);
}

TEST(Simplify, PropertiesOnRandomNoisyPolygons) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> t_dist(0.05, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon in = trial % 2 ? fx::noisy_circle(rng, 60 + rng() % 200, 60, 2.0)
                                 : fx::random_star(rng, 8 + rng() % 60, 80);
    const double t = t_dist(rng);
    const Polygon out = dce::simplify(in, {t, 3});
    EXPECT_TRUE(is_subsequence(out, in));
    EXPECT_LE(out.perimeter(), in.perimeter() + 1e-9);
    EXPECT_TRUE(is_simple(out.vertices(), out.eps()));
    EXPECT_GT(signed_area(out.vertices()), 0);
  }
}

TEST(Simplify, HugeThresholdStopsAtSimpleState) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Polygon in = fx::random_star(rng, 8 + rng() % 40, 80);
    const Polygon out = dce::simplify(in, {kHuge, 3});
    EXPECT_GE(out.size(), 3u);
    EXPECT_TRUE(is_simple(out.vertices(), out.eps()));
  }
}

TEST(EvolveCheckpoints, VertexCountsNonIncreasing) {
  std::mt19937_64 rng(6);
  const std::vector<double> thresholds{0.1, 0.3, 0.5, 1.0, 2.0, 5.0};
  for (int trial = 0; trial < 30; ++trial) {
    const Polygon in = fx::noisy_circle(rng, 150, 50, 3.0);
    const auto cps = dce::evolve_checkpoints(in, thresholds);
    ASSERT_EQ(cps.size(), thresholds.size());
    for (std::size_t k = 1; k < cps.size(); ++k) {
      EXPECT_LE(cps[k].polygon.size(), cps[k - 1].polygon.size());
      EXPECT_TRUE(is_subsequence(cps[k].polygon, cps[k - 1].polygon));
    }
    EXPECT_EQ(cps[2].polygon, dce::simplify(in, {0.5, 3}));
  }
}

TEST(EvolveCheckpoints, RejectsDescendingThresholds) {
  const std::vector<double> bad{1.0, 0.5};
  EXPECT_THROW(dce::evolve_checkpoints(fx::regular_polygon(8, 10), bad), Error);
}
