#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "shortcut/geometry.hpp"
#include "shortcut/hypotheses.hpp"

namespace shortcut {

struct FilterConfig {
  double sigma = 5.0;      ///< histogram radius (px)
  double sigma_hat = 1.0;  ///< histogram sampling pitch (px)
  double t_h1 = 0.4;       ///< coefficient-of-variation threshold
  double t_h2 = 2.0;       ///< side-ratio threshold

  void validate() const;
};

/// Angles between a cut and the boundary at its two endpoints. theta1 and
/// theta4 lie on one side of the cut (the side walked from a to b along the
/// boundary), theta2 and theta3 on the other; theta1/theta2 are at a and
/// theta3/theta4 at b.
struct CutAngles {
  double theta1 = 0, theta2 = 0, theta3 = 0, theta4 = 0;
};

CutAngles four_angles(const Polygon& simplified, const CutHypothesis& h);

/// Near-orthogonal crossing of a local symmetry axis with at least one
/// expanding side: both angles of one side exceed pi/2 - delta.
bool passes_obs_1_3(const CutAngles& angles, double delta);

/// Local widths sampled on lines parallel to a cut.
struct NeighborhoodHistogram {
  std::vector<double> widths_neg;  ///< nearest first, right of a->b
  std::vector<double> widths_pos;  ///< nearest first, left of a->b
  double width_at_cut = 0;
  double mu = 0;
  double sd = 0;
  double mu_neg = 0;
  double mu_pos = 0;

  bool has_empty_side() const { return widths_neg.empty() || widths_pos.empty(); }
};

NeighborhoodHistogram neighborhood_histogram(const Polygon& simplified, const CutHypothesis& h,
                                             const FilterConfig& cfg);

/// Fills the summary statistics from the two width lists.
void summarize(NeighborhoodHistogram& hist);

/// Salience of a single-minimum cut; double-minima cuts always pass.
bool is_salient(const CutHypothesis& h, const NeighborhoodHistogram& hist, const FilterConfig& cfg);

/// Keeps, for every m- point, the two shortest cuts of each kind that have it
/// as an m- endpoint. Output is ordered by id.
std::vector<CutHypothesis> prune_shortest_two(const std::vector<CutHypothesis>& hyps,
                                              const std::vector<std::size_t>& m_points);

enum class Verdict { kept, failed_angles, not_salient, pruned };

struct FilterReport {
  std::vector<CutHypothesis> survivors;  ///< after pruning, ordered by id
  std::vector<Verdict> verdicts;         ///< indexed like the input list
};

/// Observation tests followed by shortest-two pruning.
FilterReport filter_hypotheses(const Polygon& simplified, const std::vector<CutHypothesis>& hyps,
                               const std::vector<std::size_t>& m_points, const FilterConfig& cfg,
                               double delta);

}  // namespace shortcut
