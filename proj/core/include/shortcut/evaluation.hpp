#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shortcut/contour.hpp"
#include "shortcut/geometry.hpp"
#include "shortcut/selection.hpp"

namespace shortcut::eval {

/// Human-drawn straight segmentation lines for one shape.
struct DrawnLineSet {
  std::vector<Segment> lines;
};

/// One "x1 y1 x2 y2" record per line; blank lines and '#' comments skipped.
DrawnLineSet parse_lines(const std::string& text);
DrawnLineSet load_lines(const std::filesystem::path& path);

/// Segmentation density sampled at foreground pixel centres.
struct DensityMap {
  int width = 0;
  int height = 0;
  double sigma = 0;
  std::vector<double> q;                ///< row-major, 0 on background
  std::vector<std::uint8_t> foreground;  ///< row-major copy of the mask

  double at(int col, int row) const { return q[static_cast<std::size_t>(row) * width + col]; }
};

/// Gaussian accumulation of distances to every drawn line. Contributions
/// from lines farther than 6 sigma are dropped.
DensityMap density_map(const Mask& mask, const DrawnLineSet& lines, double sigma);

struct EvalReport {
  std::size_t n_cuts = 0;
  double mu_masked = 0;
  double mu_unmasked = 0;
  double h_score = 0;
  std::size_t n_masked = 0;    ///< foreground pixels within 3 sigma of a cut
  std::size_t n_unmasked = 0;  ///< remaining foreground pixels
  std::vector<std::string> warnings;
};

/// Masked/unmasked density means, each divided by the mean over the whole
/// foreground, and their ratio. Degenerate cases report sentinels with a
/// warning: no cuts -> H = 0, nothing unmasked -> H = +inf, zero density -> 0.
EvalReport score(const DensityMap& map, std::span<const Segment> cuts, double sigma);
EvalReport score(const DensityMap& map, std::span<const CutHypothesis> cuts, double sigma);

enum class Gesture { rock, paper, scissors };

std::string_view to_string(Gesture g);
/// Rock for k <= 2 parts, paper for k >= 5, scissors otherwise.
Gesture classify_gesture(std::size_t part_count);
inline Gesture classify_gesture(const Decomposition& d) { return classify_gesture(d.parts.size()); }

/// key=value lines, one per field.
std::string format_report(const EvalReport& report);

}  // namespace shortcut::eval
