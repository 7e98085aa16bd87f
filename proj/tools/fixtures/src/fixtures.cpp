#include "shortcut/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace shortcut::fixtures {

Polygon rectangle(double x0, double y0, double x1, double y1) {
  return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Polygon regular_polygon(std::size_t sides, double radius, Point center, double phase) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < sides; ++k) {
    const double t = phase + 2 * std::numbers::pi * double(k) / double(sides);
    pts.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return Polygon(std::move(pts));
}

Polygon plus_sign(double w, double l, Point o) {
  const double a = l, b = l + w, c = 2 * l + w;
  std::vector<Point> pts{{a, 0}, {b, 0}, {b, a}, {c, a}, {c, b}, {b, b},
                         {b, c}, {a, c}, {a, b}, {0, b}, {0, a}, {a, a}};
  for (Point& p : pts) p = p + o;
  return Polygon(std::move(pts));
}

Polygon t_shape(double bw, double bh, double sw, double sh, Point o) {
  const double s0 = (bw - sw) / 2, s1 = s0 + sw;
  std::vector<Point> pts{{s0, 0}, {s1, 0}, {s1, sh}, {bw, sh}, {bw, sh + bh}, {0, sh + bh}, {0, sh}, {s0, sh}};
  for (Point& p : pts) p = p + o;
  return Polygon(std::move(pts));
}

Polygon l_shape(double w, double h, double t, Point o) {
  std::vector<Point> pts{{0, 0}, {w, 0}, {w, t}, {t, t}, {t, h}, {0, h}};
  for (Point& p : pts) p = p + o;
  return Polygon(std::move(pts));
}

Polygon u_shape(double w, double h, double t, double base, Point o) {
  std::vector<Point> pts{{0, 0}, {w, 0}, {w, h}, {w - t, h}, {w - t, base}, {t, base}, {t, h}, {0, h}};
  for (Point& p : pts) p = p + o;
  return Polygon(std::move(pts));
}

Polygon dumbbell(double r, double neck, std::size_t samples, Point center) {
  // Lobe centres at +-d so that the two circles cross at (0, +-neck).
  const double d = std::sqrt(r * r - neck * neck);
  const double a0 = std::asin(std::min(1.0, neck / r));
  std::vector<Point> pts;
  // Right lobe: from angle pi - a0 around to -(pi - a0), passing through 0.
  const double span = 2 * (std::numbers::pi - a0);
  for (std::size_t k = 0; k <= samples; ++k) {
    const double t = -(std::numbers::pi - a0) + span * double(k) / double(samples);
    pts.push_back({center.x + d + r * std::cos(t), center.y + r * std::sin(t)});
  }
  for (std::size_t k = 0; k <= samples; ++k) {
    const double t = a0 + span * double(k) / double(samples);
    pts.push_back({center.x - d + r * std::cos(t), center.y + r * std::sin(t)});
  }
  // Both arcs end on the crossing points.
  std::vector<Point> ring;
  for (const Point& p : pts)
    if (ring.empty() || distance(ring.back(), p) > 1e-9) ring.push_back(p);
  if (distance(ring.front(), ring.back()) <= 1e-9) ring.pop_back();
  return Polygon(std::move(ring));
}

Polygon random_star(std::mt19937_64& rng, std::size_t n, double radius, Point center) {
  std::uniform_real_distribution<double> jitter(0.1, 0.9), rad(0.35, 1.0);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * (double(k) + jitter(rng)) / double(n);
    const double r = radius * rad(rng);
    pts.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return Polygon(std::move(pts));
}

Polygon noisy_circle(std::mt19937_64& rng, std::size_t n, double radius, double noise, Point center) {
  std::uniform_real_distribution<double> u(-noise, noise);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * double(k) / double(n);
    const double r = radius + u(rng);
    pts.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return Polygon(std::move(pts));
}

Polygon rotated(const Polygon& poly, double angle, Point pivot) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<Point> pts;
  for (const Point& p : poly.vertices()) {
    const Point d = p - pivot;
    pts.push_back({pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y});
  }
  return Polygon(std::move(pts));
}

Polygon scaled(const Polygon& poly, double factor) {
  std::vector<Point> pts;
  for (const Point& p : poly.vertices()) pts.push_back(p * factor);
  return Polygon(std::move(pts));
}

Polygon translated(const Polygon& poly, Point offset) {
  std::vector<Point> pts;
  for (const Point& p : poly.vertices()) pts.push_back(p + offset);
  return Polygon(std::move(pts));
}

Polygon rotate_start(const Polygon& poly, std::size_t shift) {
  std::vector<Point> pts = poly.vertices();
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(shift % pts.size()), pts.end());
  return Polygon(std::move(pts));
}

Region disk_region(Point c, double r) {
  return [=](Point p) { return distance(p, c) <= r; };
}

Region ellipse_region(Point c, double rx, double ry, double angle) {
  const double co = std::cos(angle), si = std::sin(angle);
  return [=](Point p) {
    const Point d = p - c;
    const double u = co * d.x + si * d.y, v = -si * d.x + co * d.y;
    return (u * u) / (rx * rx) + (v * v) / (ry * ry) <= 1.0;
  };
}

Region capsule_region(Point a, Point b, double r) {
  return [=](Point p) { return point_segment_distance(p, a, b) <= r; };
}

Region cone_region(Point a, Point b, double ra, double rb) {
  return [=](Point p) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    const double r = ra + (rb - ra) * t;
    return distance(p, a + ab * t) <= r;
  };
}

Region polygon_region(const Polygon& poly) {
  return [poly](Point p) { return point_in_polygon(poly, p) != Location::outside; };
}

Region union_region(std::vector<Region> parts) {
  return [parts = std::move(parts)](Point p) {
    return std::any_of(parts.begin(), parts.end(), [&](const Region& r) { return r(p); });
  };
}

Region scaled_region(const Region& region, double factor) {
  return [=](Point p) { return region(p * (1.0 / factor)); };
}

Mask paint(int width, int height, const Region& region) {
  Mask mask(width, height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) mask.set(c, r, region({double(c), double(r)}));
  return mask;
}

Mask polygon_mask(const Polygon& poly, int width, int height) { return rasterize(poly, width, height); }

Mask t_mask(double noise, std::uint64_t seed) {
  const Polygon t = t_shape(120, 30, 30, 70, {20, 10});
  if (noise <= 0) return rasterize(t, 160, 120);
  // One independent offset per pixel of outline, along the outward normal.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-noise, noise);
  std::vector<Point> pts;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = t[i], b = t[t.next(i)];
    const int steps = std::max(1, int(std::lround(distance(a, b))));
    const Point dir = (b - a) * (1.0 / distance(a, b));
    const Point outward{dir.y, -dir.x};  // CCW ring: right-hand normal points out
    for (int s = 0; s < steps; ++s) {
      const Point base = a + (b - a) * (double(s) / steps);
      // Corners stay put so neighbouring edges cannot cross.
      const bool near_corner = s <= noise + 1 || steps - s <= noise + 1;
      const double offset = u(rng);
      pts.push_back(near_corner ? base : base + outward * offset);
    }
  }
  return rasterize(Polygon(std::move(pts)), 160, 120);
}

namespace {

Region elephant_region() {
  std::vector<Region> parts;
  parts.push_back(ellipse_region({156, 90}, 68, 40));            // body
  parts.push_back(disk_region({76, 72}, 30));                    // head
  parts.push_back(cone_region({56, 86}, {34, 176}, 12, 7));      // trunk
  parts.push_back(ellipse_region({92, 108}, 14, 28, 0.2));       // ear flap
  parts.push_back(capsule_region({126, 112}, {126, 186}, 10));   // front legs
  parts.push_back(capsule_region({156, 120}, {156, 186}, 10));
  parts.push_back(capsule_region({186, 120}, {186, 186}, 10));   // hind legs
  parts.push_back(capsule_region({214, 108}, {214, 186}, 10));
  parts.push_back(capsule_region({222, 92}, {238, 150}, 4.5));   // tail
  return union_region(std::move(parts));
}

}  // namespace

Mask elephant_mask(double scale) {
  return paint(int(std::lround(256 * scale)), int(std::lround(200 * scale)),
               scaled_region(elephant_region(), scale));
}

Mask fist_mask() {
  // Closed hand seen from the back: a convex rounded block.
  return paint(160, 180, capsule_region({80, 62}, {80, 118}, 44));
}

namespace {

Region finger(Point palm_center, double angle, double reach, double r) {
  const Point dir{std::cos(angle), -std::sin(angle)};
  return capsule_region(palm_center + dir * 30.0, palm_center + dir * reach, r);
}

}  // namespace

Mask open_hand_mask() {
  const Point c{100, 120};
  std::vector<Region> parts{disk_region(c, 36), capsule_region({100, 150}, {100, 190}, 26)};
  const double pi = std::numbers::pi;
  const double angles[] = {pi * 0.95, pi * 0.68, pi * 0.53, pi * 0.38, pi * 0.22};
  for (double a : angles) parts.push_back(finger(c, a, 95, 8));
  return paint(200, 200, union_region(std::move(parts)));
}

Mask two_finger_mask() {
  const Point c{100, 120};
  std::vector<Region> parts{disk_region(c, 36), capsule_region({100, 150}, {100, 190}, 26)};
  const double pi = std::numbers::pi;
  parts.push_back(finger(c, pi * 0.66, 100, 10));
  parts.push_back(finger(c, pi * 0.34, 100, 10));
  return paint(200, 200, union_region(std::move(parts)));
}

std::vector<NamedMask> mask_suite() {
  return {
      {"plus", polygon_mask(plus_sign(40, 50, {10, 10}), 160, 160)},
      {"tee", t_mask(0, 0)},
      {"ell", polygon_mask(l_shape(100, 120, 30, {10, 10}), 130, 150)},
      {"you", polygon_mask(u_shape(110, 120, 30, 40, {10, 10}), 140, 150)},
      {"dumbbell", polygon_mask(dumbbell(40, 12, 64, {100, 60}), 200, 120)},
      {"square", polygon_mask(rectangle(10, 10, 90, 90), 100, 100)},
      {"elephant", elephant_mask()},
      {"rock_fist", fist_mask()},
      {"paper_open", open_hand_mask()},
      {"scissors_two", two_finger_mask()},
  };
}

std::vector<AnnotatedShape> annotated_suite() {
  std::vector<AnnotatedShape> out;
  // Annotations are placed where a careful annotator would cut: across the
  // narrowest part of each neck or joint, with a small wobble.
  out.push_back({"plus", polygon_mask(plus_sign(40, 50, {10, 10}), 160, 160),
                 {{{60, 60}, {100, 60}}, {{100, 60}, {100, 100}}, {{100, 100}, {60, 100}},
                  {{60, 100}, {60, 60}}, {{61, 59}, {99, 61}}, {{59, 99}, {101, 100}}}});
  out.push_back({"tee", t_mask(0, 0), {{{65, 80}, {95, 80}}, {{64, 81}, {96, 79}}}});
  out.push_back({"ell", polygon_mask(l_shape(100, 120, 30, {10, 10}), 130, 150),
                 {{{40, 40}, {40, 10}}, {{40, 40}, {10, 40}}}});
  out.push_back({"dumbbell", polygon_mask(dumbbell(40, 12, 64, {100, 60}), 200, 120),
                 {{{100, 48}, {100, 72}}, {{99, 48}, {101, 72}}}});
  out.push_back({"you", polygon_mask(u_shape(110, 120, 30, 40, {10, 10}), 140, 150),
                 {{{40, 50}, {10, 50}}, {{90, 50}, {120, 50}}}});
  return out;
}

}  // namespace shortcut::fixtures
