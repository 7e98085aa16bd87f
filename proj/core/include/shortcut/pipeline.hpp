#pragma once

#include <vector>

#include "shortcut/contour.hpp"
#include "shortcut/filters.hpp"
#include "shortcut/hypotheses.hpp"
#include "shortcut/selection.hpp"

namespace shortcut {

/// Everything computed while decomposing one shape.
struct DecompositionTrace {
  Polygon contour;                     ///< input boundary
  Polygon simplified;                  ///< DCE output; all cut geometry lives here
  std::vector<std::size_t> m_points;   ///< vertex indices into `simplified`
  std::vector<CutHypothesis> hypotheses;
  FilterReport filter;
  Disk disk;                           ///< minimum enclosing disk of `simplified`
  std::vector<SelectionStep> selection;
  Decomposition result;
};

/// Contour -> DCE -> hypotheses -> filters -> greedy selection -> parts.
DecompositionTrace decompose(const Polygon& contour, const DecomposeConfig& cfg);

inline DecompositionTrace decompose(const Mask& mask, const DecomposeConfig& cfg) {
  return decompose(trace_contour(mask), cfg);
}

}  // namespace shortcut
