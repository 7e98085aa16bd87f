#include "shortcut/dce.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace shortcut::dce {
namespace {

double turn_angle(Point prev, Point v, Point next) {
  const Point in = v - prev, out = next - v;
  return std::abs(std::atan2(cross(in, out), dot(in, out)));
}

double relevance_from(Point prev, Point v, Point next, double perimeter) {
  const double l1 = distance(prev, v) / perimeter;
  const double l2 = distance(v, next) / perimeter;
  return turn_angle(prev, v, next) * l1 * l2 / (l1 + l2);
}

// Doubly linked ring over the input vertices with a priority set keyed by
// (relevance, index).
class Evolver {
 public:
  explicit Evolver(const Polygon& poly)
      : pts_(poly.vertices()),
        perimeter_(poly.perimeter()),
        eps_(poly.eps()),
        prev_(pts_.size()),
        next_(pts_.size()),
        key_(pts_.size()),
        alive_(pts_.size()) {
    const std::size_t n = pts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      prev_[i] = (i + n - 1) % n;
      next_[i] = (i + 1) % n;
    }
    for (std::size_t i = 0; i < n; ++i) {
      key_[i] = score(i);
      queue_.insert({key_[i], i});
    }
  }

  void run(double threshold, std::size_t min_vertices) {
    const double limit = threshold / kDegreesPerRadian;
    while (alive_ > min_vertices) {
      auto it = queue_.begin();
      while (it != queue_.end() && frozen_.count(it->second)) ++it;
      if (it == queue_.end() || it->first >= limit) break;
      const std::size_t v = it->second;
      if (!removable(v)) {
        frozen_.insert(v);
        continue;
      }
      remove(v);
      frozen_.clear();
    }
  }

  Evolution result() const {
    std::vector<std::size_t> order;
    std::size_t start = 0;
    while (!in_ring(start)) ++start;
    std::size_t v = start;
    do {
      order.push_back(v);
      v = next_[v];
    } while (v != start);
    std::vector<Point> vertices;
    for (std::size_t i : order) vertices.push_back(pts_[i]);
    return {Polygon(std::move(vertices)), std::move(order)};
  }

 private:
  double score(std::size_t v) const {
    return relevance_from(pts_[prev_[v]], pts_[v], pts_[next_[v]], perimeter_);
  }
  bool in_ring(std::size_t v) const { return !removed_.count(v); }

  // The replacement edge prev->next must not touch any edge other than its
  // two neighbours (at their shared endpoints).
  bool removable(std::size_t v) const {
    const std::size_t p = prev_[v], q = next_[v];
    const Point a = pts_[p], b = pts_[q];
    if (alive_ <= 3) return false;
    if (distance(a, b) <= eps_) return false;
    const std::size_t pp = prev_[p], qq = next_[q];
    // Folding onto a neighbouring edge.
    if (point_segment_distance(pts_[pp], a, b) <= eps_ && pp != q) return false;
    if (point_segment_distance(pts_[qq], a, b) <= eps_ && qq != p) return false;
    if (point_segment_distance(a, b, pts_[qq]) <= eps_ && qq != p) return false;
    if (point_segment_distance(b, pts_[pp], a) <= eps_ && pp != q) return false;
    // TODO: a uniform grid over the live edges would make this check
    // near-constant; the linear walk makes evolution quadratic in m.
    std::size_t u = qq;
    while (u != pp) {
      const std::size_t w = next_[u];
      if (segments_touch(a, b, pts_[u], pts_[w])) return false;
      u = w;
    }
    return true;
  }

  bool segments_touch(Point p1, Point p2, Point q1, Point q2) const {
    const double d = std::min({point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2),
                               point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)});
    if (d <= eps_) return true;
    const double c1 = cross(p2 - p1, q1 - p1), c2 = cross(p2 - p1, q2 - p1);
    const double c3 = cross(q2 - q1, p1 - q1), c4 = cross(q2 - q1, p2 - q1);
    return c1 * c2 < 0 && c3 * c4 < 0;
  }

  void remove(std::size_t v) {
    const std::size_t p = prev_[v], q = next_[v];
    queue_.erase({key_[v], v});
    removed_.insert(v);
    next_[p] = q;
    prev_[q] = p;
    --alive_;
    for (std::size_t u : {p, q}) {
      queue_.erase({key_[u], u});
      key_[u] = score(u);
      queue_.insert({key_[u], u});
    }
  }

  std::vector<Point> pts_;
  double perimeter_;
  double eps_;
  std::vector<std::size_t> prev_, next_;
  std::vector<double> key_;
  std::size_t alive_;
  std::set<std::pair<double, std::size_t>> queue_;
  std::set<std::size_t> frozen_, removed_;
};

}  // namespace

void DceConfig::validate() const {
  if (!std::isfinite(t_dce) || t_dce <= 0) throw Error("t_dce must be finite and positive");
  if (min_vertices < 3) throw Error("min_vertices must be at least 3");
}

double relevance(const Polygon& poly, std::size_t vertex_index) {
  if (vertex_index >= poly.size())
    throw Error("vertex index " + std::to_string(vertex_index) + " out of range");
  const Point prev = poly[poly.prev(vertex_index)], v = poly[vertex_index], next = poly[poly.next(vertex_index)];
  if (distance(prev, v) == 0.0 || distance(v, next) == 0.0) throw Error("relevance: zero-length edge");
  return relevance_from(prev, v, next, poly.perimeter());
}

Evolution evolve(const Polygon& poly, const DceConfig& cfg) {
  cfg.validate();
  Evolver evolver(poly);
  evolver.run(cfg.t_dce, cfg.min_vertices);
  return evolver.result();
}

std::vector<Evolution> evolve_checkpoints(const Polygon& poly, std::span<const double> thresholds,
                                          std::size_t min_vertices) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw Error("evolve_checkpoints: thresholds must be ascending");
  Evolver evolver(poly);
  std::vector<Evolution> out;
  for (double t : thresholds) {
    DceConfig{t, min_vertices}.validate();
    evolver.run(t, min_vertices);
    out.push_back(evolver.result());
  }
  return out;
}

}  // namespace shortcut::dce
