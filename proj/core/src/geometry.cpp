#include "shortcut/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

namespace shortcut {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// -1 / 0 / +1 for r right of / on / left of the line p->q, with points within
// eps of the line counted as on it.
int side(Point p, Point q, Point r, double eps) {
  const double len = distance(p, q);
  const double c = cross(q - p, r - p);
  if (len == 0.0) return 0;
  if (std::abs(c) <= eps * len) return 0;
  return c > 0 ? 1 : -1;
}

bool properly_cross(Point p1, Point p2, Point q1, Point q2, double eps) {
  const int a = side(p1, p2, q1, eps);
  const int b = side(p1, p2, q2, eps);
  const int c = side(q1, q2, p1, eps);
  const int d = side(q1, q2, p2, eps);
  return a * b < 0 && c * d < 0;
}

double segment_segment_distance(Point p1, Point p2, Point q1, Point q2) {
  if (properly_cross(p1, p2, q1, q2, 0.0)) return 0.0;
  return std::min({point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2),
                   point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)});
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double diameter_of(std::span<const Point> pts) {
  const std::vector<Point> hull = convex_hull({pts.begin(), pts.end()});
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, distance(hull[i], hull[j]));
  return best;
}

}  // namespace

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

double signed_area(std::span<const Point> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

bool is_simple(std::span<const Point> ring, double eps) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  auto at = [&](std::size_t i) { return ring[i % n]; };

  // Adjacent edges must not fold back onto each other.
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = at(i + n - 1), v = at(i), b = at(i + 1);
    if (distance(a, v) <= eps || distance(v, b) <= eps) return false;
    if (side(a, v, b, eps) == 0 && dot(a - v, b - v) > 0) return false;
  }
  if (n == 3) return std::abs(signed_area(ring)) > 0.0;

  // Non-adjacent edges must not touch. Sweep over edges sorted by min x.
  struct Span {
    double lo, hi;
    std::size_t edge;
  };
  std::vector<Span> spans(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = at(i), q = at(i + 1);
    spans[i] = {std::min(p.x, q.x) - eps, std::max(p.x, q.x) + eps, i};
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.edge < b.edge);
  });
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = spans[s].edge;
    const Point p1 = at(i), p2 = at(i + 1);
    const double ylo = std::min(p1.y, p2.y) - eps, yhi = std::max(p1.y, p2.y) + eps;
    for (std::size_t u = s + 1; u < n && spans[u].lo <= spans[s].hi; ++u) {
      const std::size_t j = spans[u].edge;
      const std::size_t d = i > j ? i - j : j - i;
      if (d == 1 || d == n - 1) continue;
      const Point q1 = at(j), q2 = at(j + 1);
      if (std::max(q1.y, q2.y) < ylo || std::min(q1.y, q2.y) > yhi) continue;
      if (segment_segment_distance(p1, p2, q1, q2) <= eps) return false;
    }
  }
  return true;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error("polygon needs at least 3 vertices, got " + std::to_string(n));
  for (const Point& p : vertices_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error("polygon has a non-finite vertex");
  for (std::size_t i = 0; i < n; ++i)
    if (vertices_[i] == vertices_[(i + 1) % n])
      throw Error("polygon has repeated consecutive vertex at index " + std::to_string(i));

  area_ = signed_area(vertices_);
  if (area_ < 0) {
    std::reverse(vertices_.begin(), vertices_.end());
    area_ = -area_;
  }
  diameter_ = diameter_of(vertices_);
  if (!(area_ > 1e-12 * diameter_ * diameter_)) throw Error("polygon is degenerate (zero area)");
  if (!is_simple(vertices_, eps())) throw Error("polygon is non-simple");

  cumulative_.resize(n + 1);
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) cumulative_[i + 1] = cumulative_[i] + edge(i).length();
  perimeter_ = cumulative_[n];
}

double Polygon::shortest_edge() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) best = std::min(best, edge(i).length());
  return best;
}

double interior_angle(const Polygon& poly, std::size_t vertex_index) {
  if (vertex_index >= poly.size())
    throw Error("vertex index " + std::to_string(vertex_index) + " out of range");
  const Point v = poly[vertex_index];
  const Point to_prev = poly[poly.prev(vertex_index)] - v;
  const Point to_next = poly[poly.next(vertex_index)] - v;
  // Counterclockwise sweep from the outgoing edge to the incoming one.
  double angle = std::atan2(cross(to_next, to_prev), dot(to_next, to_prev));
  if (angle <= 0) angle += kTwoPi;
  return angle;
}

Location point_in_polygon(const Polygon& poly, Point p) {
  const double eps = poly.eps();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    if (point_segment_distance(p, e.a, e.b) <= eps) return Location::boundary;
  }
  bool inside = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly[poly.next(i)];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Location::inside : Location::outside;
}

bool segment_inside(const Polygon& poly, Point a, Point b) {
  const double len = distance(a, b);
  if (len == 0.0) return true;
  // Sample from the lexicographically smaller endpoint so the answer does not
  // depend on the argument order.
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
  const Point step = (b - a) * (1.0 / len);
  for (double s = 1.0; s < len - 1e-9; s += 1.0)
    if (point_in_polygon(poly, a + step * s) == Location::outside) return false;
  return true;
}

bool chord_interior(const Polygon& poly, Point a, Point b) {
  const double eps = poly.eps();
  if (distance(a, b) <= eps) return false;
  if (point_in_polygon(poly, (a + b) * 0.5) != Location::inside) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    if (properly_cross(a, b, e.a, e.b, eps)) return false;
    const Point v = poly[i];
    if (distance(v, a) > eps && distance(v, b) > eps && point_segment_distance(v, a, b) <= eps)
      return false;
  }
  return true;
}

Disk min_enclosing_disk(std::span<const Point> points, std::uint64_t seed) {
  if (points.empty()) throw Error("min_enclosing_disk: empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);

  const Box box = bounding_box(pts);
  const double tol = 1e-12 * std::max(1.0, distance(box.lo, box.hi));

  auto from_two = [](Point a, Point b) { return Disk{(a + b) * 0.5, 0.5 * distance(a, b)}; };
  auto from_three = [&](Point a, Point b, Point c) {
    const Point ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) <= 1e-18 * std::max(dot(ab, ab), dot(ac, ac))) {
      // Collinear: the farthest pair spans the disk.
      Disk best = from_two(a, b);
      for (Disk cand : {from_two(a, c), from_two(b, c)})
        if (cand.radius > best.radius) best = cand;
      return best;
    }
    const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
    const Point off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    return Disk{a + off, norm(off)};
  };

  Disk disk{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (disk.contains(pts[i], tol)) continue;
    disk = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (disk.contains(pts[j], tol)) continue;
      disk = from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (!disk.contains(pts[k], tol)) disk = from_three(pts[i], pts[j], pts[k]);
    }
  }
  return disk;
}

bool segments_conflict(const Segment& s1, const Segment& s2, double eps) {
  const bool aa = distance(s1.a, s2.a) <= eps, ab = distance(s1.a, s2.b) <= eps;
  const bool ba = distance(s1.b, s2.a) <= eps, bb = distance(s1.b, s2.b) <= eps;
  if ((aa && bb) || (ab && ba)) return true;  // same segment

  const int o1 = side(s1.a, s1.b, s2.a, eps), o2 = side(s1.a, s1.b, s2.b, eps);
  const int o3 = side(s2.a, s2.b, s1.a, eps), o4 = side(s2.a, s2.b, s1.b, eps);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: overlap length of the projections onto s1's direction.
    const Point dir = s1.b - s1.a;
    const double len = norm(dir);
    if (len == 0.0) return false;
    const Point u = dir * (1.0 / len);
    const double p0 = 0.0, p1 = len;
    double q0 = dot(s2.a - s1.a, u), q1 = dot(s2.b - s1.a, u);
    if (q0 > q1) std::swap(q0, q1);
    return std::min(p1, q1) - std::max(p0, q0) > eps;
  }
  return false;
}

std::optional<BoundaryPoint> locate_on_boundary(const Polygon& poly, Point p) {
  double best = std::numeric_limits<double>::infinity();
  BoundaryPoint out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const double d = point_segment_distance(p, e.a, e.b);
    if (d < best) {
      best = d;
      const Point ab = e.b - e.a;
      out.edge = i;
      out.t = std::clamp(dot(p - e.a, ab) / dot(ab, ab), 0.0, 1.0);
    }
  }
  if (best > poly.eps()) return std::nullopt;
  out.arc = poly.arc_position(out.edge) + out.t * poly.edge(out.edge).length();
  return out;
}

double arc_distance(const Polygon& poly, Point a, Point b) {
  const auto la = locate_on_boundary(poly, a);
  const auto lb = locate_on_boundary(poly, b);
  if (!la || !lb) throw Error("arc_distance: point is not on the polygon boundary");
  const double s = std::abs(la->arc - lb->arc);
  return std::min(s, poly.perimeter() - s);
}

Box bounding_box(std::span<const Point> points) {
  Box box{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
          {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (const Point& p : points) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box;
}

}  // namespace shortcut
