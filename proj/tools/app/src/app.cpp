#include "shortcut/app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shortcut::app {
namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const std::string t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw UsageError("invalid value for " + key + ": '" + text + "'");
  return value;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string table_number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("failed writing " + path.string());
}

std::string cut_record(const CutHypothesis& c) {
  return std::string(to_string(c.kind)) + " " + format_double(c.a.x) + " " + format_double(c.a.y) + " " +
         format_double(c.b.x) + " " + format_double(c.b.y);
}

Mask load_mask_checked(const fs::path& path) {
  if (!fs::exists(path)) throw UsageError("no such input: " + path.string());
  try {
    return load_mask(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Polygon trace_checked(const Mask& mask, const fs::path& source) {
  try {
    return trace_contour(mask);
  } catch (const Error& e) {
    throw UsageError(source.filename().string() + ": " + e.what());
  }
}

std::vector<fs::path> mask_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw UsageError("no such input: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".pgm" || ext == ".png")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

DecomposeConfig RunConfig::to_decompose() const {
  DecomposeConfig cfg;
  cfg.dce.t_dce = t_dce;
  cfg.hypotheses.delta = delta;
  cfg.hypotheses.n_d = n_d;
  cfg.filter.sigma = sigma;
  cfg.filter.sigma_hat = sigma_hat;
  cfg.filter.t_h1 = t_h1;
  cfg.filter.t_h2 = t_h2;
  cfg.seed = seed;
  return cfg;
}

void RunConfig::validate() const {
  try {
    to_decompose().validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string RunConfig::echo() const {
  std::ostringstream out;
  out << "t-dce=" << format_double(t_dce) << "\n"
      << "delta=" << format_double(delta) << "\n"
      << "nd=" << n_d << "\n"
      << "th1=" << format_double(t_h1) << "\n"
      << "th2=" << format_double(t_h2) << "\n"
      << "sigma=" << format_double(sigma) << "\n"
      << "sigma-hat=" << format_double(sigma_hat) << "\n"
      << "seed=" << seed << "\n";
  return out.str();
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "t-dce") cfg.t_dce = parse_number<double>(key, value);
  else if (key == "delta") cfg.delta = parse_number<double>(key, value);
  else if (key == "nd") cfg.n_d = parse_number<int>(key, value);
  else if (key == "th1") cfg.t_h1 = parse_number<double>(key, value);
  else if (key == "th2") cfg.t_h2 = parse_number<double>(key, value);
  else if (key == "sigma") cfg.sigma = parse_number<double>(key, value);
  else if (key == "sigma-hat") cfg.sigma_hat = parse_number<double>(key, value);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else throw UsageError("unknown config key: '" + key + "'");
}

RunConfig parse_run_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    set_key(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_run_config(const fs::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("no such input: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), base);
}

Polygon load_shape(const fs::path& path) {
  if (!fs::exists(path)) throw UsageError("no such input: " + path.string());
  try {
    if (path.extension() == ".poly") return load_polygon(path);
    return trace_contour(load_mask(path));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string render_svg(const DecompositionTrace& trace) {
  std::vector<Point> all = trace.contour.vertices();
  const Box box = bounding_box(all);
  const double margin = 4;
  const double w = box.hi.x - box.lo.x + 2 * margin;
  const double h = box.hi.y - box.lo.y + 2 * margin;
  auto px = [&](Point p) { return fixed(p.x - box.lo.x + margin) + "," + fixed(p.y - box.lo.y + margin); };
  auto ring = [&](const Polygon& poly) {
    std::string s;
    for (std::size_t i = 0; i < poly.size(); ++i) s += (i ? " " : "") + px(poly[i]);
    return s;
  };
  auto line = [&](const CutHypothesis& c, const std::string& style) {
    const std::string a = px(c.a), b = px(c.b);
    const auto ca = a.find(','), cb = b.find(',');
    return "  <line x1=\"" + a.substr(0, ca) + "\" y1=\"" + a.substr(ca + 1) + "\" x2=\"" + b.substr(0, cb) +
           "\" y2=\"" + b.substr(cb + 1) + "\" " + style + "/>\n";
  };

  std::set<std::size_t> accepted;
  for (const CutHypothesis& c : trace.result.cuts) accepted.insert(c.id);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w) << "\" height=\"" << fixed(h)
      << "\" viewBox=\"0 0 " << fixed(w) << " " << fixed(h) << "\">\n";
  svg << "  <polygon points=\"" << ring(trace.contour) << "\" fill=\"#eeeeee\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
  svg << "  <polygon points=\"" << ring(trace.simplified) << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>\n";
  for (const CutHypothesis& h : trace.hypotheses)
    if (!accepted.count(h.id))
      svg << line(h, "stroke=\"#2a8c2a\" stroke-width=\"0.6\" stroke-dasharray=\"3,2\"");
  for (const CutHypothesis& c : trace.result.cuts) svg << line(c, "stroke=\"#d62728\" stroke-width=\"1.6\"");
  for (std::size_t m : trace.m_points) {
    const std::string p = px(trace.simplified[m]);
    const auto comma = p.find(',');
    svg << "  <circle cx=\"" << p.substr(0, comma) << "\" cy=\"" << p.substr(comma + 1)
        << "\" r=\"1.8\" fill=\"#9c1f8c\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string summary_json(const DecompositionTrace& trace, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["config"] = {{"t-dce", cfg.t_dce}, {"delta", cfg.delta}, {"nd", cfg.n_d},   {"th1", cfg.t_h1},
                 {"th2", cfg.t_h2},    {"sigma", cfg.sigma}, {"sigma-hat", cfg.sigma_hat}, {"seed", cfg.seed}};
  j["contour_vertices"] = trace.contour.size();
  j["contour_length"] = trace.contour.perimeter();
  j["simplified_vertices"] = trace.simplified.size();
  j["m_points"] = trace.m_points.size();
  j["hypotheses"] = trace.hypotheses.size();
  j["survivors"] = trace.filter.survivors.size();
  j["disk_radius"] = trace.disk.radius;
  auto cuts = nlohmann::ordered_json::array();
  for (const CutHypothesis& c : trace.result.cuts)
    cuts.push_back({{"id", c.id},
                    {"kind", std::string(to_string(c.kind))},
                    {"a", {c.a.x, c.a.y}},
                    {"b", {c.b.x, c.b.y}},
                    {"length", c.length},
                    {"relative_length", c.relative_length}});
  j["cuts"] = std::move(cuts);
  auto parts = nlohmann::ordered_json::array();
  for (const Polygon& p : trace.result.parts) parts.push_back({{"vertices", p.size()}, {"area", p.area()}});
  j["parts"] = std::move(parts);
  j["gesture"] = std::string(eval::to_string(eval::classify_gesture(trace.result)));
  return j.dump(2) + "\n";
}

int cmd_decompose(const fs::path& input, const RunConfig& cfg, const DecomposeOutputs& outputs, std::ostream& out,
                  std::ostream& err) {
  try {
    cfg.validate();
    const Polygon contour = load_shape(input);
    const DecompositionTrace trace = decompose(contour, cfg.to_decompose());

    std::error_code ec;
    fs::create_directories(outputs.out_dir / "parts", ec);
    if (ec) throw UsageError("cannot create " + (outputs.out_dir / "parts").string() + ": " + ec.message());

    std::string cuts = "# input=" + input.filename().string() + "\n";
    std::istringstream echo(cfg.echo());
    for (std::string l; std::getline(echo, l);) cuts += "# " + l + "\n";
    for (const CutHypothesis& c : trace.result.cuts) cuts += cut_record(c) + "\n";
    write_text(outputs.out_dir / "cuts.txt", cuts);

    for (const auto& entry : fs::directory_iterator(outputs.out_dir / "parts"))
      if (entry.path().extension() == ".poly") fs::remove(entry.path());
    for (std::size_t i = 0; i < trace.result.parts.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "part_%03zu.poly", i);
      save_polygon(trace.result.parts[i], outputs.out_dir / "parts" / name);
    }
    write_text(outputs.out_dir / "summary.json", summary_json(trace, cfg));
    if (outputs.svg) write_text(*outputs.svg, render_svg(trace));

    out << "cuts=" << trace.result.cuts.size() << " parts=" << trace.result.parts.size()
        << " m_points=" << trace.m_points.size() << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

EvaluationSummary evaluate_shapes(const std::vector<fs::path>& shapes, const fs::path& annotations,
                                  const RunConfig& cfg, std::ostream& err) {
  cfg.validate();
  EvaluationSummary summary;
  for (const fs::path& shape : shapes) {
    const std::string name = shape.stem().string();
    const fs::path lines_path = annotations / (name + ".lines");
    if (!fs::exists(lines_path)) {
      err << "warning: no annotations for " << name << ", skipped\n";
      summary.skipped.push_back(name);
      continue;
    }
    const Mask mask = load_mask_checked(shape);
    eval::DrawnLineSet lines;
    try {
      lines = eval::load_lines(lines_path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const DecompositionTrace trace = decompose(trace_checked(mask, shape), cfg.to_decompose());
    const eval::DensityMap map = eval::density_map(mask, lines, cfg.sigma);
    summary.shapes.push_back({name, eval::score(map, trace.result.cuts, cfg.sigma), trace.m_points.size()});
  }
  const double n = static_cast<double>(summary.shapes.size());
  for (const ShapeScore& s : summary.shapes) {
    summary.mean_cuts += static_cast<double>(s.report.n_cuts) / n;
    summary.mean_mu_masked += s.report.mu_masked / n;
    summary.mean_mu_unmasked += s.report.mu_unmasked / n;
    summary.mean_h += s.report.h_score / n;
  }
  return summary;
}

int cmd_evaluate(const std::vector<fs::path>& shapes, const fs::path& annotations, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err) {
  try {
    if (shapes.empty()) throw UsageError("no shapes given");
    const EvaluationSummary summary = evaluate_shapes(shapes, annotations, cfg, err);
    for (const ShapeScore& s : summary.shapes) {
      out << "shape=" << s.name << "\n" << eval::format_report(s.report);
      nlohmann::ordered_json record = {{"shape", s.name},
                                       {"n_cuts", s.report.n_cuts},
                                       {"mu_masked", s.report.mu_masked},
                                       {"mu_unmasked", s.report.mu_unmasked},
                                       {"h_score", std::isinf(s.report.h_score) ? nlohmann::ordered_json("inf")
                                                                                : nlohmann::ordered_json(s.report.h_score)}};
      out << "record=" << record.dump() << "\n\n";
    }
    out << "summary shapes=" << summary.shapes.size() << " skipped=" << summary.skipped.size() << "\n";
    out << std::setw(14) << "<|C|>" << std::setw(14) << "<mu_masked>" << std::setw(14) << "<mu_unmasked>"
        << std::setw(14) << "<H>" << "\n";
    out << std::setw(14) << table_number(summary.mean_cuts) << std::setw(14) << table_number(summary.mean_mu_masked)
        << std::setw(14) << table_number(summary.mean_mu_unmasked) << std::setw(14)
        << table_number(summary.mean_h) << "\n";
    std::istringstream echo(cfg.echo());
    for (std::string l; std::getline(echo, l);) out << "# " << l << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

SweepGrid parse_grid(const std::string& spec) {
  SweepGrid grid;
  std::istringstream in(spec);
  std::string clause;
  while (std::getline(in, clause, ';')) {
    clause = trim(clause);
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw UsageError("invalid grid clause '" + clause + "'");
    const std::string key = trim(clause.substr(0, eq));
    std::istringstream values(clause.substr(eq + 1));
    std::string v;
    std::size_t count = 0;
    while (std::getline(values, v, ',')) {
      ++count;
      if (key == "th1") grid.t_h1.push_back(parse_number<double>(key, v));
      else if (key == "nd") grid.n_d.push_back(parse_number<int>(key, v));
      else if (key == "t-dce") grid.t_dce.push_back(parse_number<double>(key, v));
      else throw UsageError("unknown grid key '" + key + "'");
    }
    if (count == 0) throw UsageError("grid key '" + key + "' has no values");
  }
  return grid;
}

SweepResult sweep(const std::vector<fs::path>& shapes, const fs::path& annotations, const SweepGrid& grid,
                  const RunConfig& base, std::ostream& err) {
  const std::vector<double> th1 = grid.t_h1.empty() ? std::vector<double>{base.t_h1} : grid.t_h1;
  const std::vector<int> nd = grid.n_d.empty() ? std::vector<int>{base.n_d} : grid.n_d;
  SweepResult result;
  for (double t : th1)
    for (int n : nd) {
      RunConfig cfg = base;
      cfg.t_h1 = t;
      cfg.n_d = n;
      const EvaluationSummary s = evaluate_shapes(shapes, annotations, cfg, err);
      result.cells.push_back({t, n, s.mean_h, s.mean_cuts});
    }
  for (double t : grid.t_dce) {
    RunConfig cfg = base;
    cfg.t_dce = t;
    const EvaluationSummary s = evaluate_shapes(shapes, annotations, cfg, err);
    double m_points = 0;
    for (const ShapeScore& shape : s.shapes) m_points += static_cast<double>(shape.m_points);
    if (!s.shapes.empty()) m_points /= static_cast<double>(s.shapes.size());
    result.curve.push_back({t, s.mean_h, s.mean_cuts, m_points});
  }
  return result;
}

int cmd_sweep(const std::vector<fs::path>& shapes, const fs::path& annotations, const SweepGrid& grid,
              const RunConfig& base, std::ostream& out, std::ostream& err) {
  try {
    if (shapes.empty()) throw UsageError("no shapes given");
    for (double t : grid.t_h1) {
      RunConfig probe = base;
      probe.t_h1 = t;
      probe.validate();
    }
    for (int n : grid.n_d) {
      RunConfig probe = base;
      probe.n_d = n;
      probe.validate();
    }
    for (double t : grid.t_dce) {
      RunConfig probe = base;
      probe.t_dce = t;
      probe.validate();
    }
    const SweepResult result = sweep(shapes, annotations, grid, base, err);
    const std::vector<int> nd = grid.n_d.empty() ? std::vector<int>{base.n_d} : grid.n_d;

    out << "# <H> / <|C|>, rows th1, columns nd\n";
    out << std::setw(8) << "th1\\nd";
    for (int n : nd) out << std::setw(24) << n;
    out << "\n";
    for (std::size_t i = 0; i < result.cells.size(); i += nd.size()) {
      out << std::setw(8) << format_double(result.cells[i].t_h1);
      for (std::size_t k = 0; k < nd.size(); ++k) {
        const SweepCell& c = result.cells[i + k];
        out << std::setw(24) << (table_number(c.mean_h) + " / " + table_number(c.mean_cuts));
      }
      out << "\n";
    }
    if (!result.curve.empty()) {
      out << "# per t-dce: <H>, <|C|>, <n>\n";
      for (const SweepCurvePoint& p : result.curve)
        out << "t-dce=" << format_double(p.t_dce) << " H=" << table_number(p.mean_h)
            << " C=" << table_number(p.mean_cuts) << " n=" << table_number(p.mean_m_points) << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

RunConfig gesture_defaults() {
  RunConfig cfg;
  cfg.t_dce = 1.2;
  return cfg;
}

std::optional<eval::Gesture> gesture_from_name(const std::string& stem) {
  for (eval::Gesture g : {eval::Gesture::rock, eval::Gesture::paper, eval::Gesture::scissors})
    if (stem.rfind(std::string(eval::to_string(g)), 0) == 0) return g;
  return std::nullopt;
}

int cmd_gesture(const fs::path& mask_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const std::vector<fs::path> files = mask_files(mask_dir);
    if (files.empty()) throw UsageError("no .pgm or .png masks in " + mask_dir.string());
    // confusion[truth][predicted]
    std::map<eval::Gesture, std::map<eval::Gesture, int>> confusion;
    bool labelled = false;
    for (const fs::path& f : files) {
      const DecompositionTrace trace = decompose(trace_checked(load_mask_checked(f), f), cfg.to_decompose());
      const eval::Gesture g = eval::classify_gesture(trace.result);
      out << f.stem().string() << " " << eval::to_string(g) << " parts=" << trace.result.parts.size() << "\n";
      if (const auto truth = gesture_from_name(f.stem().string())) {
        labelled = true;
        ++confusion[*truth][g];
      }
    }
    if (labelled) {
      const eval::Gesture all[] = {eval::Gesture::rock, eval::Gesture::paper, eval::Gesture::scissors};
      out << "# confusion (rows truth, columns predicted)\n" << std::setw(10) << "";
      for (eval::Gesture g : all) out << std::setw(10) << eval::to_string(g);
      out << "\n";
      for (eval::Gesture t : all) {
        out << std::setw(10) << eval::to_string(t);
        for (eval::Gesture g : all) out << std::setw(10) << confusion[t][g];
        out << "\n";
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace shortcut::app
