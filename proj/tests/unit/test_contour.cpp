#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "shortcut/contour.hpp"
#include "shortcut/fixtures.hpp"

using namespace shortcut;
namespace fx = shortcut::fixtures;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "shortcut_contour_tests";
  fs::create_directories(dir);
  return dir / name;
}

Mask block_mask(int size, int x0, int y0, int w, int h) {
  Mask m(size, size);
  for (int r = y0; r < y0 + h; ++r)
    for (int c = x0; c < x0 + w; ++c) m.set(c, r, true);
  return m;
}

// Background reachable from outside the image through 4-connected steps.
std::vector<char> exterior(const Mask& m) {
  const int w = m.width(), h = m.height();
  std::vector<char> ext(static_cast<std::size_t>(w + 2) * (h + 2), 0);
  auto idx = [&](int c, int r) { return static_cast<std::size_t>(r + 1) * (w + 2) + (c + 1); };
  std::vector<std::pair<int, int>> stack{{-1, -1}};
  ext[idx(-1, -1)] = 1;
  while (!stack.empty()) {
    const auto [c, r] = stack.back();
    stack.pop_back();
    for (const auto& [dc, dr] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const int nc = c + dc, nr = r + dr;
      if (nc < -1 || nr < -1 || nc > w || nr > h || ext[idx(nc, nr)] || m.at(nc, nr)) continue;
      ext[idx(nc, nr)] = 1;
      stack.push_back({nc, nr});
    }
  }
  return ext;
}

// Foreground pixels with a 4-neighbour in the exterior background. Hole
// boundaries are not part of the traced outline.
std::set<std::pair<int, int>> boundary_pixels(const Mask& m) {
  const std::vector<char> ext = exterior(m);
  auto outside = [&](int c, int r) { return ext[static_cast<std::size_t>(r + 1) * (m.width() + 2) + (c + 1)] != 0; };
  std::set<std::pair<int, int>> out;
  for (int r = 0; r < m.height(); ++r)
    for (int c = 0; c < m.width(); ++c)
      if (m.at(c, r) && (outside(c - 1, r) || outside(c + 1, r) || outside(c, r - 1) || outside(c, r + 1)))
        out.insert({c, r});
  return out;
}

double distance_to_polygon(const Polygon& p, Point q) {
  double best = 1e300;
  for (std::size_t i = 0; i < p.size(); ++i) best = std::min(best, point_segment_distance(q, p[i], p[p.next(i)]));
  return best;
}

Mask random_blob(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(25, 55), rad(6, 16);
  std::vector<fx::Region> disks;
  Point c{40, 40};
  for (int k = 0; k < 5; ++k) {
    disks.push_back(fx::disk_region(c, rad(rng)));
    c = {pos(rng), pos(rng)};
    // Chain each disk to the first so the blob stays connected.
    disks.push_back(fx::capsule_region({40, 40}, c, 4));
  }
  return fx::paint(80, 80, fx::union_region(disks));
}

}  // namespace

TEST(TraceContour, FourByFourBlock) {
  const Mask m = block_mask(10, 3, 3, 4, 4);
  const Polygon p = trace_contour(m);
  EXPECT_EQ(p.size(), 12u);
  EXPECT_DOUBLE_EQ(p.perimeter(), 12.0);
  const auto expected = boundary_pixels(m);
  EXPECT_EQ(expected.size(), 12u);
  for (const Point& v : p.vertices()) EXPECT_TRUE(expected.count({int(v.x), int(v.y)}));
}

TEST(TraceContour, NoForeground) {
  try {
    trace_contour(Mask(8, 8));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no foreground"), std::string::npos);
  }
}

TEST(TraceContour, MultipleComponents) {
  Mask m = block_mask(20, 2, 2, 4, 4);
  for (int r = 10; r < 14; ++r)
    for (int c = 10; c < 14; ++c) m.set(c, r, true);
  try {
    trace_contour(m);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("multiple components"), std::string::npos);
  }
}

TEST(TraceContour, DiagonalNeighboursAreOneComponent) {
  Mask m = block_mask(20, 2, 2, 4, 4);
  for (int r = 6; r < 10; ++r)
    for (int c = 6; c < 10; ++c) m.set(c, r, true);
  EXPECT_EQ(count_components(m), 1);
}

TEST(TraceContour, BorderTouchingMaskKeepsInputFrame) {
  const Mask m = block_mask(6, 0, 0, 4, 3);
  const Polygon p = trace_contour(m);
  const Box b = bounding_box(p.vertices());
  EXPECT_DOUBLE_EQ(b.lo.x, 0);
  EXPECT_DOUBLE_EQ(b.lo.y, 0);
  EXPECT_DOUBLE_EQ(b.hi.x, 3);
  EXPECT_DOUBLE_EQ(b.hi.y, 2);
}

TEST(TraceContour, RandomBlobsAreSimpleAndHugTheBoundary) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Mask m = random_blob(rng);
    ASSERT_EQ(count_components(m), 1);
    const Polygon p = trace_contour(m);
    EXPECT_TRUE(is_simple(p.vertices(), p.eps()));
    EXPECT_GT(signed_area(p.vertices()), 0);
    for (const auto& [c, r] : boundary_pixels(m)) EXPECT_LE(distance_to_polygon(p, {double(c), double(r)}), 1.0);
  }
}

TEST(TraceContour, RasterRoundTripRecoversForeground) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Mask m = random_blob(rng);
    ASSERT_GE(m.count(), 100u);
    const Mask back = rasterize(trace_contour(m), m.width(), m.height());
    std::size_t recovered = 0;
    for (int r = 0; r < m.height(); ++r)
      for (int c = 0; c < m.width(); ++c) recovered += m.at(c, r) && back.at(c, r);
    EXPECT_GE(double(recovered), 0.99 * double(m.count()));
  }
}

TEST(PolygonFile, TriangleRoundTripIsExact) {
  const Polygon tri({{0.1, 1.0 / 3.0}, {10.25, -2e-7}, {3.5, 7.125}});
  const fs::path path = temp_path("tri.poly");
  save_polygon(tri, path);
  EXPECT_EQ(load_polygon(path), tri);
}

TEST(PolygonFile, TwoVerticesIsAnError) {
  EXPECT_THROW(parse_polygon("2\n0 0\n1 1\n"), Error);
}

TEST(PolygonFile, BowTieIsNonSimple) {
  try {
    parse_polygon("4\n0 0\n4 4\n4 0\n0 2\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-simple"), std::string::npos) << e.what();
  }
}

TEST(PolygonFile, MalformedText) {
  EXPECT_THROW(parse_polygon("3\n0 0\n1 x\n2 2\n"), Error);
  EXPECT_THROW(parse_polygon("4\n0 0\n1 0\n1 1\n"), Error);
}

TEST(MaskFile, PgmRoundTrip) {
  const Mask m = block_mask(12, 2, 3, 5, 4);
  const fs::path path = temp_path("block.pgm");
  save_pgm(m, path);
  EXPECT_EQ(load_mask(path), m);
}

TEST(MaskFile, AsciiPgm) {
  const fs::path path = temp_path("ascii.pgm");
  std::ofstream(path) << "P2\n# comment\n3 2\n15\n0 15 8\n7 0 15\n";
  const Mask m = load_mask(path);
  EXPECT_FALSE(m.at(0, 0));
  EXPECT_TRUE(m.at(1, 0));
  EXPECT_TRUE(m.at(2, 0));   // 8/15 is above half
  EXPECT_FALSE(m.at(0, 1));  // 7/15 is below
}

TEST(MaskFile, PngGrayAndColour) {
  for (const char* name : {"block.png", "block_rgb.png"}) {
    const Mask m = load_mask(fs::path(SHORTCUT_TEST_DATA) / name);
    EXPECT_EQ(m.width(), 40);
    EXPECT_EQ(m.height(), 30);
    EXPECT_EQ(m.count(), 20u * 15u) << name;
    EXPECT_TRUE(m.at(5, 6));
    EXPECT_FALSE(m.at(4, 6));
  }
}

TEST(MaskFile, MissingFile) {
  try {
    load_mask(temp_path("does_not_exist.pgm"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no such input"), std::string::npos);
  }
}
