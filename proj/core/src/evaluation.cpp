#include "shortcut/evaluation.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace shortcut::eval {

DrawnLineSet parse_lines(const std::string& text) {
  DrawnLineSet set;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double v[4];
    int got = 0;
    while (got < 4 && fields >> v[got]) ++got;
    if (got == 0 && fields.eof()) continue;
    std::string extra;
    if (got != 4 || (fields >> extra))
      throw Error("malformed annotation line " + std::to_string(lineno) + ": expected x1 y1 x2 y2");
    const Segment s{{v[0], v[1]}, {v[2], v[3]}};
    if (!(s.length() > 0)) throw Error("annotation line " + std::to_string(lineno) + " has zero length");
    set.lines.push_back(s);
  }
  return set;
}

DrawnLineSet load_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lines(ss.str());
}

DensityMap density_map(const Mask& mask, const DrawnLineSet& lines, double sigma) {
  if (!(sigma > 0)) throw Error("density_map: sigma must be positive");
  DensityMap map;
  map.width = mask.width();
  map.height = mask.height();
  map.sigma = sigma;
  map.q.assign(static_cast<std::size_t>(map.width) * map.height, 0.0);
  map.foreground.assign(map.q.size(), 0);
  const double cutoff = 6.0 * sigma;
  for (int r = 0; r < map.height; ++r)
    for (int c = 0; c < map.width; ++c) {
      if (!mask.at(c, r)) continue;
      const std::size_t idx = static_cast<std::size_t>(r) * map.width + c;
      map.foreground[idx] = 1;
      const Point x{double(c), double(r)};
      double q = 0;
      for (const Segment& line : lines.lines) {
        const double d = point_segment_distance(x, line.a, line.b);
        if (d <= cutoff) q += std::exp(-(d * d) / (sigma * sigma));
      }
      map.q[idx] = q;
    }
  return map;
}

EvalReport score(const DensityMap& map, std::span<const Segment> cuts, double sigma) {
  EvalReport report;
  report.n_cuts = cuts.size();
  const double reach = 3.0 * sigma;
  double sum_all = 0, sum_masked = 0, sum_unmasked = 0;
  for (int r = 0; r < map.height; ++r)
    for (int c = 0; c < map.width; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * map.width + c;
      if (!map.foreground[idx]) continue;
      const Point x{double(c), double(r)};
      bool masked = false;
      for (const Segment& cut : cuts)
        if (point_segment_distance(x, cut.a, cut.b) <= reach) {
          masked = true;
          break;
        }
      sum_all += map.q[idx];
      if (masked) {
        ++report.n_masked;
        sum_masked += map.q[idx];
      } else {
        ++report.n_unmasked;
        sum_unmasked += map.q[idx];
      }
    }

  const std::size_t total = report.n_masked + report.n_unmasked;
  if (cuts.empty()) {
    report.warnings.push_back("no cuts: mu_masked undefined, reporting H = 0");
    if (total > 0 && sum_all > 0) report.mu_unmasked = (sum_unmasked / report.n_unmasked) / (sum_all / total);
    return report;
  }
  if (total == 0 || sum_all <= 0) {
    report.warnings.push_back("zero segmentation density: reporting H = 0");
    return report;
  }
  const double mean_all = sum_all / static_cast<double>(total);
  report.mu_masked = report.n_masked ? (sum_masked / report.n_masked) / mean_all : 0.0;
  if (report.n_unmasked == 0) {
    report.warnings.push_back("cuts cover the whole shape: reporting H = +inf");
    report.mu_unmasked = 0;
    report.h_score = std::numeric_limits<double>::infinity();
    return report;
  }
  report.mu_unmasked = (sum_unmasked / report.n_unmasked) / mean_all;
  if (report.mu_unmasked > 0) {
    report.h_score = report.mu_masked / report.mu_unmasked;
  } else {
    report.warnings.push_back("no density outside the cut masks: reporting H = +inf");
    report.h_score = std::numeric_limits<double>::infinity();
  }
  return report;
}

EvalReport score(const DensityMap& map, std::span<const CutHypothesis> cuts, double sigma) {
  std::vector<Segment> segments;
  segments.reserve(cuts.size());
  for (const CutHypothesis& h : cuts) segments.push_back(h.segment());
  return score(map, segments, sigma);
}

std::string_view to_string(Gesture g) {
  switch (g) {
    case Gesture::rock: return "rock";
    case Gesture::paper: return "paper";
    case Gesture::scissors: return "scissors";
  }
  return "?";
}

Gesture classify_gesture(std::size_t part_count) {
  if (part_count <= 2) return Gesture::rock;
  if (part_count >= 5) return Gesture::paper;
  return Gesture::scissors;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "n_cuts=" << report.n_cuts << "\n"
      << "mu_masked=" << report.mu_masked << "\n"
      << "mu_unmasked=" << report.mu_unmasked << "\n"
      << "h_score=" << report.h_score << "\n"
      << "n_masked=" << report.n_masked << "\n"
      << "n_unmasked=" << report.n_unmasked << "\n";
  for (const std::string& w : report.warnings) out << "warning=" << w << "\n";
  return out.str();
}

}  // namespace shortcut::eval
