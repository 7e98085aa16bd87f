#include "shortcut/pipeline.hpp"

namespace shortcut {

DecompositionTrace decompose(const Polygon& contour, const DecomposeConfig& cfg) {
  cfg.validate();
  Polygon simplified = dce::simplify(contour, cfg.dce);
  HypothesisSet set = generate_hypotheses(simplified, cfg.hypotheses, contour.perimeter());
  FilterReport filter =
      filter_hypotheses(simplified, set.hypotheses, set.m_points, cfg.filter, cfg.hypotheses.delta);
  const Disk disk = min_enclosing_disk(simplified.vertices(), cfg.seed);
  std::vector<SelectionStep> steps = select_cuts(filter.survivors, disk.radius, simplified.eps());

  Decomposition result;
  result.config = cfg;
  for (const SelectionStep& step : steps)
    if (step.decision == Decision::accepted) result.cuts.push_back(step.hypothesis);
  result.parts = split_into_parts(simplified, result.cuts);

  return DecompositionTrace{contour,
                            std::move(simplified),
                            std::move(set.m_points),
                            std::move(set.hypotheses),
                            std::move(filter),
                            disk,
                            std::move(steps),
                            std::move(result)};
}

}  // namespace shortcut
