#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "shortcut/dce.hpp"
#include "shortcut/filters.hpp"
#include "shortcut/geometry.hpp"
#include "shortcut/hypotheses.hpp"

namespace shortcut {

/// Every parameter of one decomposition run.
struct DecomposeConfig {
  dce::DceConfig dce;
  HypothesisConfig hypotheses;
  FilterConfig filter;
  std::uint64_t seed = 0;  ///< drives the minimum-enclosing-disk shuffle

  void validate() const {
    dce.validate();
    hypotheses.validate();
    filter.validate();
  }
};

/// Accepted cuts and the parts they produce.
struct Decomposition {
  std::vector<CutHypothesis> cuts;  ///< in acceptance order
  std::vector<Polygon> parts;
  DecomposeConfig config;
};

/// Cut length over the enclosing-disk radius, doubled for single-minimum cuts.
double relative_length(const CutHypothesis& h, double radius);

/// Extra pairwise conflict test; returning true forbids accepting both cuts.
using ConflictPredicate = std::function<bool(const CutHypothesis&, const CutHypothesis&)>;

/// The default conflict: the cut segments cross or overlap.
bool cuts_conflict(const CutHypothesis& x, const CutHypothesis& y, double eps);

enum class Decision { accepted, degree_cap, conflict };

struct SelectionStep {
  CutHypothesis hypothesis;  ///< relative_length filled in
  Decision decision = Decision::accepted;
  /// For `conflict`, the id of the first accepted cut it conflicts with.
  std::optional<std::size_t> blocked_by;
};

/// Greedy short-cut selection: hypotheses examined by ascending relative
/// length (ties by id); a hypothesis is skipped if one of its m- endpoints
/// already carries two accepted cuts or if it conflicts with an accepted cut.
/// `eps` is the incidence tolerance of the underlying polygon.
std::vector<SelectionStep> select_cuts(std::vector<CutHypothesis> pruned, double radius, double eps,
                                       std::span<const ConflictPredicate> extra_conflicts = {});

/// Accepted cuts of select_cuts, in acceptance order.
std::vector<CutHypothesis> determine_cuts(const std::vector<CutHypothesis>& pruned,
                                          const std::vector<std::size_t>& m_points, double radius,
                                          double eps);

/// Splits the polygon along mutually non-conflicting interior chords. Returns
/// cuts.size() + 1 simple polygons.
std::vector<Polygon> split_into_parts(const Polygon& simplified, std::span<const CutHypothesis> cuts);

}  // namespace shortcut
