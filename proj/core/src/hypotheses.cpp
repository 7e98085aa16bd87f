#include "shortcut/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

namespace shortcut {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleEps = 1e-9;

double ccw_angle(Point from, Point to) {
  double a = std::atan2(cross(from, to), dot(from, to));
  if (a < 0) a += kTwoPi;
  return a;
}

bool valid_chord(const Polygon& poly, Point a, Point b) {
  return segment_inside(poly, a, b) && chord_interior(poly, a, b);
}

CutHypothesis make_double(const Polygon& poly, std::size_t i, std::size_t j) {
  CutHypothesis h;
  h.kind = CutKind::double_minima;
  h.a_index = i;
  h.b_index = j;
  h.a = poly[i];
  h.b = poly[j];
  h.length = distance(h.a, h.b);
  return h;
}

}  // namespace

void HypothesisConfig::validate() const {
  if (!(delta > 0 && delta < std::numbers::pi / 2)) throw Error("delta must lie in (0, pi/2)");
  if (n_d < 4 || n_d % 2 != 0) throw Error("n_d must be an even integer >= 4");
  if (!(merge_fraction > 0 && merge_fraction < 1)) throw Error("merge_fraction must lie in (0, 1)");
}

std::string_view to_string(CutKind kind) {
  return kind == CutKind::double_minima ? "double" : "single";
}

std::vector<std::size_t> find_m_points(const Polygon& simplified, const HypothesisConfig& cfg) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < simplified.size(); ++i)
    if (interior_angle(simplified, i) > std::numbers::pi + cfg.delta) out.push_back(i);
  return out;
}

std::vector<CutHypothesis> double_minima_hypotheses(const Polygon& simplified,
                                                    const std::vector<std::size_t>& m_points) {
  std::vector<CutHypothesis> out;
  for (std::size_t x = 0; x < m_points.size(); ++x)
    for (std::size_t y = x + 1; y < m_points.size(); ++y) {
      const std::size_t i = m_points[x], j = m_points[y];
      if (valid_chord(simplified, simplified[i], simplified[j])) out.push_back(make_double(simplified, i, j));
    }
  return out;
}

std::optional<Point> cast_ray(const Polygon& poly, std::size_t from, Point dir) {
  const Point p = poly[from];
  const double len = norm(dir);
  if (len == 0.0) return std::nullopt;
  const Point d = dir * (1.0 / len);

  const Point to_next = poly[poly.next(from)] - p;
  const Point to_prev = poly[poly.prev(from)] - p;
  const double phi = ccw_angle(to_next, d);
  if (!(phi > kAngleEps && phi < ccw_angle(to_next, to_prev) - kAngleEps)) return std::nullopt;

  const double eps = poly.eps();
  auto offset = [&](Point q) { return cross(d, q - p); };  // signed distance from the ray line
  auto classify = [&](double s) { return std::abs(s) <= eps ? 0 : (s > 0 ? 1 : -1); };

  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == from) continue;
    const Point v = poly[k];
    // Vertex hit.
    if (classify(offset(v)) == 0) {
      const double t = dot(v - p, d);
      if (t > eps && t < best) {
        const int sp = classify(offset(poly[poly.prev(k)]));
        const int sn = classify(offset(poly[poly.next(k)]));
        if (!(sp != 0 && sp == sn)) best = t;  // grazing contact does not end the ray
      }
    }
    // Crossing in the interior of edge k -> next(k).
    const std::size_t k2 = poly.next(k);
    if (k2 == from) continue;
    const Point w = poly[k2];
    const double ov = offset(v), ow = offset(w);
    if (classify(ov) * classify(ow) < 0) {
      const Point hit = v + (w - v) * (ov / (ov - ow));
      const double t = dot(hit - p, d);
      if (t > eps && t < best) best = t;
    }
  }
  if (!std::isfinite(best)) return std::nullopt;
  return p + d * best;
}

std::vector<CutHypothesis> single_minimum_hypotheses(const Polygon& simplified,
                                                     const std::vector<std::size_t>& m_points,
                                                     const HypothesisConfig& cfg,
                                                     double contour_length) {
  cfg.validate();
  const double merge_threshold = std::min(cfg.merge_fraction * contour_length, simplified.shortest_edge());
  std::vector<CutHypothesis> out;
  for (std::size_t x = 0; x < m_points.size(); ++x) {
    const std::size_t i = m_points[x];
    for (int k = 0; k < cfg.n_d; ++k) {
      const double angle = kTwoPi * k / cfg.n_d;
      const auto exit = cast_ray(simplified, i, {std::cos(angle), std::sin(angle)});
      if (!exit) continue;

      // Nearest other m- point along the boundary.
      std::optional<std::size_t> partner;
      double partner_dist = merge_threshold;
      for (std::size_t j : m_points) {
        if (j == i) continue;
        const double dist = arc_distance(simplified, *exit, simplified[j]);
        if (dist < partner_dist) {
          partner_dist = dist;
          partner = j;
        }
      }

      if (partner) {
        if (!valid_chord(simplified, simplified[i], simplified[*partner])) continue;
        CutHypothesis h = make_double(simplified, i, *partner);
        h.direction = k;
        out.push_back(h);
        continue;
      }
      if (!valid_chord(simplified, simplified[i], *exit)) continue;
      CutHypothesis h;
      h.kind = CutKind::single_minimum;
      h.a_index = i;
      h.a = simplified[i];
      h.b = *exit;
      h.direction = k;
      h.length = distance(h.a, h.b);
      out.push_back(h);
    }
  }
  return out;
}

HypothesisSet generate_hypotheses(const Polygon& simplified, const HypothesisConfig& cfg,
                                  double contour_length) {
  cfg.validate();
  HypothesisSet set;
  set.m_points = find_m_points(simplified, cfg);

  std::map<std::size_t, std::size_t> position;  // vertex index -> rank among m- points
  for (std::size_t x = 0; x < set.m_points.size(); ++x) position[set.m_points[x]] = x;

  using Key = std::tuple<std::size_t, int, std::size_t>;
  std::map<Key, CutHypothesis> ordered;
  auto add_double = [&](CutHypothesis h) {
    std::size_t pa = position.at(h.a_index), pb = position.at(*h.b_index);
    if (pa > pb) {
      std::swap(h.a, h.b);
      std::swap(pa, pb);
      const std::size_t tmp = h.a_index;
      h.a_index = *h.b_index;
      h.b_index = tmp;
    }
    h.direction.reset();
    ordered.try_emplace(Key{pa, 0, pb}, h);
  };

  for (CutHypothesis& h : double_minima_hypotheses(simplified, set.m_points)) add_double(h);
  for (CutHypothesis& h : single_minimum_hypotheses(simplified, set.m_points, cfg, contour_length)) {
    if (h.is_double()) {
      add_double(h);
    } else {
      ordered.try_emplace(Key{position.at(h.a_index), 1, static_cast<std::size_t>(*h.direction)}, h);
    }
  }

  set.hypotheses.reserve(ordered.size());
  for (auto& [key, h] : ordered) {
    h.id = set.hypotheses.size();
    set.hypotheses.push_back(h);
  }
  return set;
}

}  // namespace shortcut
