#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shortcut {

/// Raised for malformed inputs anywhere in the library (bad files, invalid
/// polygons, out-of-range indices).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Euclidean distance from p to the closed segment [a, b].
double point_segment_distance(Point p, Point a, Point b);

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
};

enum class Orientation { counterclockwise };

/// A closed simple polygon, always stored counterclockwise.
///
/// Construction validates the input: at least three finite vertices, no
/// repeated consecutive vertex, and no pair of non-adjacent edges touching.
/// Clockwise input is reversed.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  Orientation orientation() const { return Orientation::counterclockwise; }

  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }
  /// Edge i runs from vertex i to vertex next(i).
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[next(i)]}; }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  /// Largest distance between two vertices.
  double diameter() const { return diameter_; }
  double shortest_edge() const;
  /// Boundary/incidence tolerance: 1e-6 times the diameter.
  double eps() const { return 1e-6 * diameter_; }

  /// Arc length from vertex 0 to vertex i along the boundary.
  double arc_position(std::size_t vertex) const { return cumulative_[vertex]; }

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  double diameter_ = 0.0;
};

/// Signed area by the shoelace formula (positive for counterclockwise).
double signed_area(std::span<const Point> ring);

/// True if no two non-adjacent edges of the closed ring touch and no two
/// adjacent edges fold back over each other. Brute force over edge pairs.
bool is_simple(std::span<const Point> ring, double eps);

double interior_angle(const Polygon& poly, std::size_t vertex_index);

enum class Location { inside, boundary, outside };

Location point_in_polygon(const Polygon& poly, Point p);

/// Rasterized containment: every sample along the open segment a-b at one
/// pixel spacing must be inside or on the boundary. Endpoints are not
/// sampled.
bool segment_inside(const Polygon& poly, Point a, Point b);

/// Stricter companion of segment_inside used for cut hypotheses: the open
/// chord must not cross or touch the boundary anywhere, and its midpoint must
/// be strictly inside.
bool chord_interior(const Polygon& poly, Point a, Point b);

struct Disk {
  Point center;
  double radius = 0.0;

  bool contains(Point p, double eps) const { return distance(center, p) <= radius + eps; }
};

/// Smallest enclosing disk by randomized incremental construction
/// (move-to-front). The shuffle is seeded so results are reproducible.
Disk min_enclosing_disk(std::span<const Point> points, std::uint64_t seed = 0);

/// True iff the open segments properly cross or overlap collinearly over a
/// positive length. A single shared endpoint is not a conflict.
bool segments_conflict(const Segment& s1, const Segment& s2, double eps);

/// Location of a point on the polygon boundary.
struct BoundaryPoint {
  std::size_t edge = 0;  ///< edge index
  double t = 0.0;        ///< parameter along the edge in [0, 1]
  double arc = 0.0;      ///< arc length from vertex 0
};

/// Projects p onto the boundary; empty if p is farther than eps() away.
std::optional<BoundaryPoint> locate_on_boundary(const Polygon& poly, Point p);

/// Shorter of the two boundary walks between a and b. Throws Error if either
/// point is not on the boundary.
double arc_distance(const Polygon& poly, Point a, Point b);

/// Axis-aligned bounding box.
struct Box {
  Point lo;
  Point hi;
};
Box bounding_box(std::span<const Point> points);

}  // namespace shortcut
