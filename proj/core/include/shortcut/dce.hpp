#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "shortcut/geometry.hpp"

namespace shortcut::dce {

/// Discrete Curve Evolution stopping rule.
///
/// `t_dce` is compared with the relevance of a vertex computed with the turn
/// angle expressed in degrees, i.e. evolution stops once every remaining
/// vertex satisfies `relevance * 180 / pi >= t_dce`. On this scale the
/// customary thresholds (0.1 for fine detail, 0.5 default, 1.2 for hands,
/// 3 for coarse outlines) are meaningful for perimeter-normalized lengths.
struct DceConfig {
  double t_dce = 0.5;
  std::size_t min_vertices = 3;

  void validate() const;
};

constexpr double kDegreesPerRadian = 180.0 / std::numbers::pi;

/// K = beta * l1 * l2 / (l1 + l2) at a vertex, with beta the absolute turn
/// angle in radians and l1, l2 the incident edge lengths divided by the
/// polygon perimeter.
double relevance(const Polygon& poly, std::size_t vertex_index);

/// Same quantity on the t_dce scale (turn angle in degrees).
inline double relevance_score(const Polygon& poly, std::size_t vertex_index) {
  return relevance(poly, vertex_index) * kDegreesPerRadian;
}

/// Result of an evolution: the simplified polygon and, for each of its
/// vertices, the index of that vertex in the input polygon.
struct Evolution {
  Polygon polygon;
  std::vector<std::size_t> source_index;
};

/// Repeatedly removes the vertex of smallest relevance until every remaining
/// vertex reaches t_dce or only min_vertices remain. A removal that would
/// make the polygon non-simple is skipped until some other removal succeeds.
/// Ties go to the lowest input index.
Evolution evolve(const Polygon& poly, const DceConfig& cfg);

inline Polygon simplify(const Polygon& poly, const DceConfig& cfg) { return evolve(poly, cfg).polygon; }

/// One continued evolution stopped at each threshold in ascending order; the
/// i-th result is the state at thresholds[i].
std::vector<Evolution> evolve_checkpoints(const Polygon& poly, std::span<const double> thresholds,
                                          std::size_t min_vertices = 3);

}  // namespace shortcut::dce
