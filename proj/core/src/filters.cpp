#include "shortcut/filters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>

namespace shortcut {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ccw_angle(Point from, Point to) {
  double a = std::atan2(cross(from, to), dot(from, to));
  if (a < 0) a += kTwoPi;
  return a;
}

// Directions along the boundary away from p: towards the next and the
// previous vertex (p may sit on a vertex or inside an edge).
std::pair<Point, Point> boundary_directions(const Polygon& poly, Point p) {
  const auto loc = locate_on_boundary(poly, p);
  if (!loc) throw Error("four_angles: cut endpoint is not on the boundary");
  const double eps = poly.eps();
  const Segment e = poly.edge(loc->edge);
  if (distance(p, e.a) <= eps) {
    const std::size_t v = loc->edge;
    return {poly[poly.next(v)] - poly[v], poly[poly.prev(v)] - poly[v]};
  }
  if (distance(p, e.b) <= eps) {
    const std::size_t v = poly.next(loc->edge);
    return {poly[poly.next(v)] - poly[v], poly[poly.prev(v)] - poly[v]};
  }
  return {e.b - p, e.a - p};
}

// Length of the inside interval of the line {origin + s*u} containing s = 0.
std::optional<double> chord_through(const Polygon& poly, Point origin, Point u) {
  std::vector<double> params;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly[i], q = poly[poly.next(i)];
    const double sp = cross(u, p - origin), sq = cross(u, q - origin);
    if ((sp > 0) != (sq > 0)) {
      const double tp = dot(p - origin, u), tq = dot(q - origin, u);
      params.push_back(tp + (tq - tp) * sp / (sp - sq));
    }
  }
  std::sort(params.begin(), params.end());
  for (std::size_t k = 0; k + 1 < params.size(); k += 2)
    if (params[k] <= 0.0 && 0.0 <= params[k + 1]) return params[k + 1] - params[k];
  return std::nullopt;
}

}  // namespace

void FilterConfig::validate() const {
  if (!(sigma_hat > 0)) throw Error("sigma_hat must be positive");
  if (!(sigma >= sigma_hat)) throw Error("sigma must be at least sigma_hat");
  if (!(t_h1 > 0 && t_h1 < 1)) throw Error("t_h1 must lie in (0, 1)");
  if (!(t_h2 > 1)) throw Error("t_h2 must exceed 1");
}

CutAngles four_angles(const Polygon& simplified, const CutHypothesis& h) {
  const Point u = h.b - h.a, w = h.a - h.b;
  const auto [next_a, prev_a] = boundary_directions(simplified, h.a);
  const auto [next_b, prev_b] = boundary_directions(simplified, h.b);
  CutAngles out;
  out.theta1 = ccw_angle(next_a, u);
  out.theta2 = ccw_angle(u, prev_a);
  out.theta3 = ccw_angle(next_b, w);
  out.theta4 = ccw_angle(w, prev_b);
  return out;
}

bool passes_obs_1_3(const CutAngles& angles, double delta) {
  const double floor = std::numbers::pi / 2 - delta;
  return (angles.theta1 > floor && angles.theta4 > floor) || (angles.theta2 > floor && angles.theta3 > floor);
}

void summarize(NeighborhoodHistogram& hist) {
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
  };
  hist.mu_neg = mean(hist.widths_neg);
  hist.mu_pos = mean(hist.widths_pos);
  const std::size_t count = hist.widths_neg.size() + hist.widths_pos.size();
  if (count == 0) {
    hist.mu = hist.sd = 0;
    return;
  }
  double sum = 0;
  for (double x : hist.widths_neg) sum += x;
  for (double x : hist.widths_pos) sum += x;
  hist.mu = sum / static_cast<double>(count);
  double ss = 0;
  for (double x : hist.widths_neg) ss += (x - hist.mu) * (x - hist.mu);
  for (double x : hist.widths_pos) ss += (x - hist.mu) * (x - hist.mu);
  hist.sd = std::sqrt(ss / static_cast<double>(count));
}

NeighborhoodHistogram neighborhood_histogram(const Polygon& simplified, const CutHypothesis& h,
                                             const FilterConfig& cfg) {
  cfg.validate();
  NeighborhoodHistogram hist;
  hist.width_at_cut = h.length;
  const double len = distance(h.a, h.b);
  if (len == 0.0) return hist;
  const Point u = (h.b - h.a) * (1.0 / len);
  const Point normal{-u.y, u.x};
  const Point mid = (h.a + h.b) * 0.5;
  const int samples = static_cast<int>(std::floor(cfg.sigma / cfg.sigma_hat + 1e-9));

  for (int sign : {-1, 1}) {
    std::vector<double>& side = sign < 0 ? hist.widths_neg : hist.widths_pos;
    for (int k = 1; k <= samples; ++k) {
      const Point origin = mid + normal * (sign * k * cfg.sigma_hat);
      if (point_in_polygon(simplified, origin) != Location::inside) break;
      const auto width = chord_through(simplified, origin, u);
      if (!width || *width <= 0) break;
      side.push_back(*width);
    }
  }
  summarize(hist);
  return hist;
}

bool is_salient(const CutHypothesis& h, const NeighborhoodHistogram& hist, const FilterConfig& cfg) {
  if (h.is_double()) return true;
  if (hist.has_empty_side() || hist.mu <= 0) return false;
  if (!(h.length < hist.mu)) return false;
  const double ratio = std::max(hist.mu_neg / hist.mu_pos, hist.mu_pos / hist.mu_neg);
  return hist.sd / hist.mu > cfg.t_h1 || ratio > cfg.t_h2;
}

std::vector<CutHypothesis> prune_shortest_two(const std::vector<CutHypothesis>& hyps,
                                              const std::vector<std::size_t>& m_points) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<bool> keep(hyps.size(), false);
  for (std::size_t v : m_points) {
    for (CutKind kind : {CutKind::double_minima, CutKind::single_minimum}) {
      using Rank = std::tuple<double, std::size_t, int, std::size_t, std::size_t>;
      std::vector<Rank> ranked;
      for (std::size_t i = 0; i < hyps.size(); ++i) {
        const CutHypothesis& h = hyps[i];
        if (h.kind != kind || !h.has_m_endpoint(v)) continue;
        std::size_t other = kNone;
        if (h.is_double()) other = h.a_index == v ? *h.b_index : h.a_index;
        ranked.emplace_back(h.length, other, h.direction.value_or(-1), h.id, i);
      }
      std::sort(ranked.begin(), ranked.end());
      for (std::size_t r = 0; r < ranked.size() && r < 2; ++r) keep[std::get<4>(ranked[r])] = true;
    }
  }
  std::vector<CutHypothesis> out;
  for (std::size_t i = 0; i < hyps.size(); ++i)
    if (keep[i]) out.push_back(hyps[i]);
  std::sort(out.begin(), out.end(), [](const CutHypothesis& x, const CutHypothesis& y) { return x.id < y.id; });
  return out;
}

FilterReport filter_hypotheses(const Polygon& simplified, const std::vector<CutHypothesis>& hyps,
                               const std::vector<std::size_t>& m_points, const FilterConfig& cfg,
                               double delta) {
  cfg.validate();
  FilterReport report;
  report.verdicts.assign(hyps.size(), Verdict::kept);
  std::vector<CutHypothesis> passing;
  std::map<std::size_t, std::size_t> slot_of_id;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const CutHypothesis& h = hyps[i];
    slot_of_id[h.id] = i;
    if (!passes_obs_1_3(four_angles(simplified, h), delta)) {
      report.verdicts[i] = Verdict::failed_angles;
      continue;
    }
    if (!h.is_double() && !is_salient(h, neighborhood_histogram(simplified, h, cfg), cfg)) {
      report.verdicts[i] = Verdict::not_salient;
      continue;
    }
    passing.push_back(h);
  }
  report.survivors = prune_shortest_two(passing, m_points);
  std::vector<bool> survived(hyps.size(), false);
  for (const CutHypothesis& h : report.survivors) survived[slot_of_id.at(h.id)] = true;
  for (const CutHypothesis& h : passing)
    if (!survived[slot_of_id.at(h.id)]) report.verdicts[slot_of_id.at(h.id)] = Verdict::pruned;
  return report;
}

}  // namespace shortcut
