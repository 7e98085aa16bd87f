#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "shortcut/geometry.hpp"

namespace shortcut {

struct HypothesisConfig {
  double delta = std::numbers::pi / 9.0;  ///< concavity threshold (radians)
  int n_d = 16;                           ///< number of ray directions
  double merge_fraction = 0.01;           ///< fraction of contour length for merging

  void validate() const;
};

enum class CutKind { double_minima, single_minimum };

std::string_view to_string(CutKind kind);

/// A candidate part-cut. `a` is always an m- vertex of the simplified polygon;
/// for double-minima cuts `b` is one too.
struct CutHypothesis {
  std::size_t id = 0;
  CutKind kind = CutKind::single_minimum;
  Point a;
  Point b;
  std::size_t a_index = 0;
  std::optional<std::size_t> b_index;
  /// Ray direction index for single-minimum cuts (and for doubles created by
  /// merging a ray exit).
  std::optional<int> direction;
  double length = 0.0;
  double relative_length = 0.0;

  Segment segment() const { return {a, b}; }
  bool is_double() const { return kind == CutKind::double_minima; }
  /// True if vertex v is an m- endpoint of this cut.
  bool has_m_endpoint(std::size_t v) const { return a_index == v || (b_index && *b_index == v); }
};

/// Reflex vertices whose interior angle exceeds pi + delta, in boundary order.
std::vector<std::size_t> find_m_points(const Polygon& simplified, const HypothesisConfig& cfg);

/// Every pair of m- points whose connecting chord lies inside the shape.
std::vector<CutHypothesis> double_minima_hypotheses(const Polygon& simplified,
                                                    const std::vector<std::size_t>& m_points);

/// Rays from each m- point in n_d global directions (angle 2*pi*k/n_d). A ray
/// pointing into the shape yields the chord to its first exit. Exits within
/// min(merge_fraction * contour_length, shortest edge) of another m- point
/// along the boundary are snapped to it and reported as double-minima cuts.
/// `contour_length` is the perimeter of the unsimplified contour.
std::vector<CutHypothesis> single_minimum_hypotheses(const Polygon& simplified,
                                                     const std::vector<std::size_t>& m_points,
                                                     const HypothesisConfig& cfg,
                                                     double contour_length);

struct HypothesisSet {
  std::vector<std::size_t> m_points;
  std::vector<CutHypothesis> hypotheses;  ///< ids 0..size-1 in generation order
};

/// Both generators combined, deduplicated by endpoint pair, ordered by
/// (m- point, double before single, partner or direction) and numbered.
HypothesisSet generate_hypotheses(const Polygon& simplified, const HypothesisConfig& cfg,
                                  double contour_length);

/// First transversal exit of the ray from vertex `from` in direction `dir`,
/// or nothing if the ray does not start into the interior.
std::optional<Point> cast_ray(const Polygon& poly, std::size_t from, Point dir);

}  // namespace shortcut
