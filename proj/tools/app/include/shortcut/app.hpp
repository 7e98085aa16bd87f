#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shortcut/evaluation.hpp"
#include "shortcut/pipeline.hpp"

namespace shortcut::app {

/// Input problems (bad flags, unreadable files, malformed data): exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Every tunable parameter of a run. Keys in config files mirror the
/// command-line flags without the leading dashes.
struct RunConfig {
  double t_dce = 0.5;
  double delta = 0.3490658503988659;  // pi / 9
  int n_d = 16;
  double t_h1 = 0.4;
  double t_h2 = 2.0;
  double sigma = 5;
  double sigma_hat = 1;
  std::uint64_t seed = 0;

  DecomposeConfig to_decompose() const;
  /// Throws UsageError if any module-level invariant fails.
  void validate() const;
  /// "key=value" lines in a fixed order; parse_run_config accepts it back.
  std::string echo() const;
};

/// Applies one key=value setting. Unknown keys and unparsable values throw.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);
/// Starts from `base` and applies every "key=value" line; '#' starts a comment.
RunConfig parse_run_config(const std::string& text, RunConfig base = {});
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

/// Polygon files (.poly) are read as vertex lists, everything else as a mask.
Polygon load_shape(const std::filesystem::path& path);

/// Overlay of a decomposition: contour (grey), simplified polygon (blue),
/// rejected hypotheses (dashed) and accepted cuts (solid red).
std::string render_svg(const DecompositionTrace& trace);

/// The JSON summary written next to the cut and part files.
std::string summary_json(const DecompositionTrace& trace, const RunConfig& cfg);

struct DecomposeOutputs {
  std::filesystem::path out_dir;          ///< cuts.txt, summary.json, parts/
  std::optional<std::filesystem::path> svg;
};

int cmd_decompose(const std::filesystem::path& input, const RunConfig& cfg, const DecomposeOutputs& outputs,
                  std::ostream& out, std::ostream& err);

struct ShapeScore {
  std::string name;
  eval::EvalReport report;
  std::size_t m_points = 0;
};

struct EvaluationSummary {
  std::vector<ShapeScore> shapes;
  std::vector<std::string> skipped;
  double mean_cuts = 0;
  double mean_mu_masked = 0;
  double mean_mu_unmasked = 0;
  double mean_h = 0;
};

/// Decomposes each mask and scores it against `<annotations>/<stem>.lines`.
/// Shapes without an annotation file are skipped.
EvaluationSummary evaluate_shapes(const std::vector<std::filesystem::path>& shapes,
                                  const std::filesystem::path& annotations, const RunConfig& cfg,
                                  std::ostream& err);

int cmd_evaluate(const std::vector<std::filesystem::path>& shapes, const std::filesystem::path& annotations,
                 const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parameter grid: rows t_h1, columns n_d, plus a list of t_dce values for
/// the per-threshold curves. Empty lists fall back to the base config value.
struct SweepGrid {
  std::vector<double> t_h1;
  std::vector<int> n_d;
  std::vector<double> t_dce;
};

/// "th1=0.2,0.4;nd=8,16;t-dce=0.5,1" (any subset of the three keys).
SweepGrid parse_grid(const std::string& spec);

struct SweepCell {
  double t_h1 = 0;
  int n_d = 0;
  double mean_h = 0;
  double mean_cuts = 0;
};

struct SweepCurvePoint {
  double t_dce = 0;
  double mean_h = 0;
  double mean_cuts = 0;
  double mean_m_points = 0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  ///< row-major: t_h1 outer, n_d inner
  std::vector<SweepCurvePoint> curve;
};

SweepResult sweep(const std::vector<std::filesystem::path>& shapes, const std::filesystem::path& annotations,
                  const SweepGrid& grid, const RunConfig& base, std::ostream& err);

int cmd_sweep(const std::vector<std::filesystem::path>& shapes, const std::filesystem::path& annotations,
              const SweepGrid& grid, const RunConfig& base, std::ostream& out, std::ostream& err);

/// t_dce defaults to 1.2 for gesture masks.
RunConfig gesture_defaults();

/// Ground truth from the filename prefix ("rock", "paper", "scissors").
std::optional<eval::Gesture> gesture_from_name(const std::string& stem);

int cmd_gesture(const std::filesystem::path& mask_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace shortcut::app
