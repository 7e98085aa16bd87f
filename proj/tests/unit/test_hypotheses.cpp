#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "shortcut/dce.hpp"
#include "shortcut/fixtures.hpp"
#include "shortcut/hypotheses.hpp"

using namespace shortcut;
namespace fx = shortcut::fixtures;
constexpr double pi = std::numbers::pi;

namespace {

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

std::size_t index_of(const Polygon& p, Point q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (distance(p[i], q) < 1e-9) return i;
  return p.size();
}

// Unordered endpoint pair, rounded so that pairs from different vertex
// numberings compare equal.
using Key = std::pair<std::pair<long long, long long>, std::pair<long long, long long>>;
Key key(const CutHypothesis& h) {
  auto r = [](Point p) { return std::pair{std::llround(p.x * 1e6), std::llround(p.y * 1e6)}; };
  auto a = r(h.a), b = r(h.b);
  if (b < a) std::swap(a, b);
  return {a, b};
}

Polygon random_simple(std::mt19937_64& rng) {
  return fx::random_star(rng, 8 + rng() % 53, 100);
}

}  // namespace

TEST(HypothesisConfig, Validation) {
  HypothesisConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.delta = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.delta = pi / 2;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.n_d = 7;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.n_d = 2;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.merge_fraction = 1;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(FindMPoints, ConvexShapesHaveNone) {
  EXPECT_TRUE(find_m_points(fx::rectangle(0, 0, 10, 10), {}).empty());
  EXPECT_TRUE(find_m_points(fx::regular_polygon(9, 20), {}).empty());
}

TEST(FindMPoints, PlusSignInnerCorners) {
  EXPECT_EQ(find_m_points(fx::plus_sign(30, 30), {}), (std::vector<std::size_t>{2, 5, 8, 11}));
}

TEST(FindMPoints, ShallowReflexBelowDeltaIgnored) {
  // Interior angle pi + 0.2 at vertex 3, under pi + pi/9.
  const double h = 50 * std::tan(0.1);
  const Polygon p({{0, 0}, {100, 0}, {100, 60}, {50, 60 - h}, {0, 60}});
  EXPECT_TRUE(find_m_points(p, {}).empty());
  EXPECT_EQ(find_m_points(p, {0.15, 16, 0.01}), (std::vector<std::size_t>{3}));
}

TEST(DoubleMinima, PlusSignAllSixPairs) {
  const Polygon plus = fx::plus_sign(30, 30);
  const auto hyps = double_minima_hypotheses(plus, find_m_points(plus, {}));
  ASSERT_EQ(hyps.size(), 6u);
  int sides = 0, diagonals = 0;
  for (const CutHypothesis& h : hyps) {
    EXPECT_EQ(h.kind, CutKind::double_minima);
    if (std::abs(h.length - 30) < 1e-12) ++sides;
    if (std::abs(h.length - 30 * std::sqrt(2.0)) < 1e-12) ++diagonals;
  }
  EXPECT_EQ(sides, 4);
  EXPECT_EQ(diagonals, 2);
}

TEST(DoubleMinima, SinglePointHasNoPairs) {
  const Polygon ell = fx::l_shape(80, 80, 20);
  EXPECT_TRUE(double_minima_hypotheses(ell, find_m_points(ell, {})).empty());
}

TEST(DoubleMinima, AdjacentMPointsShareAnEdgeNotACut) {
  // A flat notch floor joins the two reflex corners by a boundary edge.
  const Polygon u = fx::u_shape(100, 80, 25, 30);
  const auto m = find_m_points(u, {});
  ASSERT_EQ(m, (std::vector<std::size_t>{4, 5}));
  EXPECT_TRUE(double_minima_hypotheses(u, m).empty());
}

TEST(DoubleMinima, UShapeNotchChord) {
  // A raised floor keeps the two notch corners apart; their chord runs
  // through the base under the bump.
  const Polygon u({{0, 0}, {100, 0}, {100, 80}, {75, 80}, {75, 30}, {50, 40}, {25, 30}, {25, 80}, {0, 80}});
  const auto m = find_m_points(u, {});
  ASSERT_EQ(m, (std::vector<std::size_t>{4, 6}));
  const auto hyps = double_minima_hypotheses(u, m);
  ASSERT_EQ(hyps.size(), 1u);
  EXPECT_DOUBLE_EQ(hyps[0].length, 50);
}

TEST(DoubleMinima, ChordOutsideShapeDropped) {
  // A dipped floor puts the straight line between the notch corners in the gap.
  const Polygon u({{0, 0}, {100, 0}, {100, 80}, {75, 80}, {75, 30}, {50, 20}, {25, 30}, {25, 80}, {0, 80}});
  const auto m = find_m_points(u, {});
  ASSERT_EQ(m, (std::vector<std::size_t>{4, 5, 6}));
  EXPECT_TRUE(double_minima_hypotheses(u, m).empty());
}

TEST(CastRay, ExitsThroughOppositeWall) {
  const Polygon ell = fx::l_shape(80, 80, 20);
  // Reflex corner (20, 20): straight down crosses the foot, north-east is
  // already outside.
  const auto hit = cast_ray(ell, 3, {0, -1});
  ASSERT_TRUE(hit.has_value());
  EXPECT_NEAR(hit->x, 20, 1e-12);
  EXPECT_NEAR(hit->y, 0, 1e-12);
  EXPECT_FALSE(cast_ray(ell, 3, {1, 1}).has_value());
}

TEST(SingleMinimum, ConvexPolygonEmitsNothing) {
  const Polygon sq = fx::rectangle(0, 0, 10, 10);
  EXPECT_TRUE(single_minimum_hypotheses(sq, find_m_points(sq, {}), {}, sq.perimeter()).empty());
}

TEST(SingleMinimum, LShapeRays) {
  const Polygon ell = fx::l_shape(80, 80, 20);
  const auto m = find_m_points(ell, {});
  ASSERT_EQ(m, (std::vector<std::size_t>{3}));
  const auto hyps = single_minimum_hypotheses(ell, m, {}, ell.perimeter());
  EXPECT_LE(hyps.size(), 16u);
  EXPECT_GE(hyps.size(), 1u);
  std::set<int> dirs;
  for (const CutHypothesis& h : hyps) {
    EXPECT_EQ(h.kind, CutKind::single_minimum);
    EXPECT_EQ(h.a_index, 3u);
    ASSERT_TRUE(h.direction.has_value());
    EXPECT_TRUE(dirs.insert(*h.direction).second);
    // Every emitted ray starts into the interior.
    const double angle = 2 * pi * *h.direction / 16;
    const Point probe = ell[3] + Point{std::cos(angle), std::sin(angle)} * 1e-3;
    EXPECT_EQ(point_in_polygon(ell, probe), Location::inside);
  }
  EXPECT_TRUE(dirs.count(12));  // straight down
  EXPECT_TRUE(dirs.count(8));   // straight west
  EXPECT_FALSE(dirs.count(2));  // north-east leaves the shape at once
}

TEST(SingleMinimum, RayNearAnotherMPointMergesIntoDouble) {
  const Polygon base = fx::plus_sign(30, 30);
  const Polygon plus = fx::rotated(base, 0.003, base[11]);
  const auto m = find_m_points(plus, {});
  ASSERT_EQ(m, (std::vector<std::size_t>{2, 5, 8, 11}));
  const auto hyps = single_minimum_hypotheses(plus, m, {}, plus.perimeter());
  const auto east = std::find_if(hyps.begin(), hyps.end(), [](const CutHypothesis& h) {
    return h.a_index == 11 && h.direction == 0;
  });
  ASSERT_NE(east, hyps.end());
  EXPECT_EQ(east->kind, CutKind::double_minima);
  ASSERT_TRUE(east->b_index.has_value());
  EXPECT_EQ(*east->b_index, 2u);
  EXPECT_EQ(east->b, plus[2]);
}

TEST(SingleMinimum, NoSingleEndsInsideTheMergeWindow) {
  std::mt19937_64 rng(3);
  const HypothesisConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    const Polygon p = random_simple(rng);
    const auto m = find_m_points(p, cfg);
    const double window = std::min(cfg.merge_fraction * p.perimeter(), p.shortest_edge());
    for (const CutHypothesis& h : single_minimum_hypotheses(p, m, cfg, p.perimeter())) {
      if (h.is_double()) continue;
      for (std::size_t j : m)
        if (j != h.a_index) EXPECT_GE(arc_distance(p, h.b, p[j]), window);
    }
  }
}

TEST(GenerateHypotheses, PlusSignDoublesAfterMerging) {
  const Polygon plus = fx::plus_sign(30, 30);
  const HypothesisSet set = generate_hypotheses(plus, {}, plus.perimeter());
  EXPECT_EQ(set.m_points.size(), 4u);
  const auto doubles = std::count_if(set.hypotheses.begin(), set.hypotheses.end(),
                                     [](const CutHypothesis& h) { return h.is_double(); });
  EXPECT_EQ(doubles, 6);
}

TEST(GenerateHypotheses, PropertiesOnRandomPolygons) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Polygon p = random_simple(rng);
    HypothesisConfig cfg;
    cfg.n_d = trial % 3 == 0 ? 8 : 16;
    const HypothesisSet set = generate_hypotheses(p, cfg, p.perimeter() * 1.3);
    const std::size_t n = set.m_points.size();
    EXPECT_LE(set.hypotheses.size(), choose2(n) + static_cast<std::size_t>(cfg.n_d) * n);
    std::set<Key> seen;
    for (std::size_t k = 0; k < set.hypotheses.size(); ++k) {
      const CutHypothesis& h = set.hypotheses[k];
      EXPECT_EQ(h.id, k);
      EXPECT_TRUE(std::binary_search(set.m_points.begin(), set.m_points.end(), h.a_index));
      EXPECT_EQ(h.a, p[h.a_index]);
      if (h.is_double()) {
        ASSERT_TRUE(h.b_index.has_value());
        EXPECT_TRUE(std::binary_search(set.m_points.begin(), set.m_points.end(), *h.b_index));
      }
      EXPECT_TRUE(locate_on_boundary(p, h.a).has_value());
      EXPECT_TRUE(locate_on_boundary(p, h.b).has_value());
      EXPECT_GT(h.length, 0);
      EXPECT_NEAR(h.length, distance(h.a, h.b), 1e-9);
      EXPECT_TRUE(segment_inside(p, h.a, h.b));
      EXPECT_TRUE(seen.insert(key(h)).second) << "duplicate hypothesis " << h.id;
    }
  }
}

TEST(GenerateHypotheses, InvariantUnderStartIndex) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const Polygon p = dce::simplify(fx::noisy_circle(rng, 120, 60, 12), {0.3, 3});
    const Polygon q = fx::rotate_start(p, 1 + rng() % (p.size() - 1));
    const auto hp = generate_hypotheses(p, {}, p.perimeter()).hypotheses;
    const auto hq = generate_hypotheses(q, {}, q.perimeter()).hypotheses;
    std::set<std::pair<Key, CutKind>> sp, sq;
    for (const auto& h : hp) sp.insert({key(h), h.kind});
    for (const auto& h : hq) sq.insert({key(h), h.kind});
    EXPECT_EQ(sp, sq);
  }
}
