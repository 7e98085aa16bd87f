#include "shortcut/selection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace shortcut {
namespace {

// Index of p in the ring, inserting it into the containing edge if needed.
std::size_t ensure_vertex(std::vector<Point>& ring, Point p, double eps) {
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (distance(ring[i], p) <= eps) return i;
  std::size_t best = ring.size();
  double best_d = eps;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double d = point_segment_distance(p, ring[i], ring[(i + 1) % ring.size()]);
    if (d <= best_d) {
      best_d = d;
      best = i;
    }
  }
  if (best == ring.size()) throw Error("split_into_parts: cut endpoint is not on the part boundary");
  ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(best + 1), p);
  return best + 1;
}

}  // namespace

double relative_length(const CutHypothesis& h, double radius) {
  return (h.is_double() ? 1.0 : 2.0) * h.length / radius;
}

bool cuts_conflict(const CutHypothesis& x, const CutHypothesis& y, double eps) {
  return segments_conflict(x.segment(), y.segment(), eps);
}

std::vector<SelectionStep> select_cuts(std::vector<CutHypothesis> pruned, double radius, double eps,
                                       std::span<const ConflictPredicate> extra_conflicts) {
  if (!(radius > 0)) throw Error("select_cuts: radius must be positive");
  for (CutHypothesis& h : pruned) h.relative_length = relative_length(h, radius);
  std::sort(pruned.begin(), pruned.end(), [](const CutHypothesis& x, const CutHypothesis& y) {
    return x.relative_length < y.relative_length || (x.relative_length == y.relative_length && x.id < y.id);
  });

  std::vector<SelectionStep> steps;
  std::vector<CutHypothesis> accepted;
  std::map<std::size_t, int> degree;
  for (const CutHypothesis& h : pruned) {
    SelectionStep step{h, Decision::accepted, std::nullopt};
    const bool saturated =
        degree[h.a_index] >= 2 || (h.is_double() && degree[*h.b_index] >= 2);
    if (saturated) {
      step.decision = Decision::degree_cap;
    } else {
      for (const CutHypothesis& c : accepted) {
        bool conflict = cuts_conflict(h, c, eps);
        for (const ConflictPredicate& extra : extra_conflicts) conflict = conflict || extra(h, c);
        if (conflict) {
          step.decision = Decision::conflict;
          step.blocked_by = c.id;
          break;
        }
      }
    }
    if (step.decision == Decision::accepted) {
      accepted.push_back(h);
      ++degree[h.a_index];
      if (h.is_double()) ++degree[*h.b_index];
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<CutHypothesis> determine_cuts(const std::vector<CutHypothesis>& pruned,
                                          const std::vector<std::size_t>& m_points, double radius,
                                          double eps) {
  const std::set<std::size_t> m_set(m_points.begin(), m_points.end());
  for (const CutHypothesis& h : pruned)
    if (!m_set.count(h.a_index) || (h.b_index && !m_set.count(*h.b_index)))
      throw Error("determine_cuts: hypothesis " + std::to_string(h.id) + " has an endpoint outside the m- set");
  std::vector<CutHypothesis> accepted;
  for (const SelectionStep& step : select_cuts(pruned, radius, eps))
    if (step.decision == Decision::accepted) accepted.push_back(step.hypothesis);
  return accepted;
}

std::vector<Polygon> split_into_parts(const Polygon& simplified, std::span<const CutHypothesis> cuts) {
  const double eps = simplified.eps();
  std::vector<std::vector<Point>> parts{simplified.vertices()};
  for (const CutHypothesis& cut : cuts) {
    const Point mid = (cut.a + cut.b) * 0.5;
    bool done = false;
    for (std::size_t p = 0; p < parts.size() && !done; ++p) {
      const Polygon part(parts[p]);
      if (point_in_polygon(part, mid) != Location::inside) continue;
      if (!locate_on_boundary(part, cut.a) || !locate_on_boundary(part, cut.b))
        throw Error("split_into_parts: cut endpoints are not on the containing part");
      std::vector<Point> ring = parts[p];
      std::size_t ia = ensure_vertex(ring, cut.a, eps);
      std::size_t ib = ensure_vertex(ring, cut.b, eps);
      // Inserting b may shift a.
      ia = ensure_vertex(ring, cut.a, eps);
      if (ia == ib) throw Error("split_into_parts: degenerate cut");
      std::vector<Point> first, second;
      for (std::size_t i = ia;; i = (i + 1) % ring.size()) {
        first.push_back(ring[i]);
        if (i == ib) break;
      }
      for (std::size_t i = ib;; i = (i + 1) % ring.size()) {
        second.push_back(ring[i]);
        if (i == ia) break;
      }
      parts[p] = std::move(first);
      parts.push_back(std::move(second));
      done = true;
    }
    if (!done) throw Error("split_into_parts: cut " + std::to_string(cut.id) + " lies in no part");
  }
  std::vector<Polygon> out;
  out.reserve(parts.size());
  for (auto& ring : parts) out.emplace_back(std::move(ring));
  return out;
}

}  // namespace shortcut
