#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shortcut/app.hpp"

namespace {

using shortcut::app::RunConfig;

// Flags shared by every subcommand; applied over defaults and --config.
struct CommonFlags {
  std::optional<double> t_dce, delta, t_h1, t_h2, sigma, sigma_hat;
  std::optional<int> n_d;
  std::optional<std::uint64_t> seed;
  std::string config;

  void attach(CLI::App* cmd) {
    cmd->add_option("--t-dce", t_dce, "DCE relevance threshold");
    cmd->add_option("--delta", delta, "concavity threshold (radians)");
    cmd->add_option("--nd", n_d, "number of ray directions");
    cmd->add_option("--th1", t_h1, "salience threshold on sd/mean");
    cmd->add_option("--th2", t_h2, "salience threshold on the side-mean ratio");
    cmd->add_option("--sigma", sigma, "neighbourhood radius (px)");
    cmd->add_option("--sigma-hat", sigma_hat, "histogram sampling pitch (px)");
    cmd->add_option("--seed", seed, "seed for the enclosing-disk shuffle");
    cmd->add_option("--config", config, "key=value config file");
  }

  RunConfig resolve(RunConfig base) const {
    if (!config.empty()) base = shortcut::app::load_run_config(config, base);
    if (t_dce) base.t_dce = *t_dce;
    if (delta) base.delta = *delta;
    if (n_d) base.n_d = *n_d;
    if (t_h1) base.t_h1 = *t_h1;
    if (t_h2) base.t_h2 = *t_h2;
    if (sigma) base.sigma = *sigma;
    if (sigma_hat) base.sigma_hat = *sigma_hat;
    if (seed) base.seed = *seed;
    return base;
  }
};

std::vector<std::filesystem::path> to_paths(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int main(int argc, char** argv) {
  namespace app = shortcut::app;
  CLI::App cli{"Part decomposition of 2D silhouettes by the short-cut rule"};
  cli.require_subcommand(1);

  CommonFlags dflags, eflags, sflags, gflags;

  auto* dec = cli.add_subcommand("decompose", "decompose one mask or polygon");
  std::string input, out_dir = "out", svg;
  dec->add_option("input", input, "mask (.pgm/.png) or polygon (.poly)")->required();
  dec->add_option("--out-dir", out_dir, "directory for cuts.txt, summary.json and parts/");
  dec->add_option("--svg", svg, "write an SVG overlay to this path");
  dflags.attach(dec);

  auto* ev = cli.add_subcommand("evaluate", "score decompositions against drawn lines");
  std::vector<std::string> eshapes;
  std::string eann;
  ev->add_option("shapes", eshapes, "mask files");
  ev->add_option("--annotations", eann, "directory with <stem>.lines files")->required();
  eflags.attach(ev);

  auto* sw = cli.add_subcommand("sweep", "evaluate over a parameter grid");
  std::vector<std::string> sshapes;
  std::string sann, grid = "th1=0.2,0.4,0.6;nd=8,16";
  sw->add_option("shapes", sshapes, "mask files");
  sw->add_option("--annotations", sann, "directory with <stem>.lines files")->required();
  sw->add_option("--grid", grid, "e.g. \"th1=0.2,0.4;nd=8,16;t-dce=0.5,1\"");
  sflags.attach(sw);

  auto* ge = cli.add_subcommand("gesture", "classify hand masks as rock, paper or scissors");
  std::string gdir;
  ge->add_option("dir", gdir, "directory of .pgm/.png masks")->required();
  gflags.attach(ge);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::kExitUsage;
  }

  try {
    if (*dec) {
      app::DecomposeOutputs outputs{out_dir, std::nullopt};
      if (!svg.empty()) outputs.svg = svg;
      return app::cmd_decompose(input, dflags.resolve({}), outputs, std::cout, std::cerr);
    }
    if (*ev) return app::cmd_evaluate(to_paths(eshapes), eann, eflags.resolve({}), std::cout, std::cerr);
    if (*sw)
      return app::cmd_sweep(to_paths(sshapes), sann, app::parse_grid(grid), sflags.resolve({}), std::cout,
                            std::cerr);
    if (*ge) return app::cmd_gesture(gdir, gflags.resolve(app::gesture_defaults()), std::cout, std::cerr);
  } catch (const app::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return app::kExitInternal;
  }
  return app::kExitUsage;
}
