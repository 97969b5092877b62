#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "triad/commands.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::string model;
  std::int64_t seed = -1;
  int workers = -1;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--config", opts->config_path, "experiment config file");
  cmd->add_option("--seed", opts->seed, "master seed override");
  cmd->add_option("--out", opts->out_dir, "output directory override");
  cmd->add_option("--workers", opts->workers,
                  "worker threads (0 = all hardware threads)");
  cmd->add_option("--model", opts->model, "model override: det|hst|est")
      ->check(CLI::IsMember({"det", "hst", "est"}));
}

triad::ExperimentConfig make_config(const CommonOptions& opts) {
  triad::ExperimentConfig cfg = triad::load_config(opts.config_path);
  if (opts.seed >= 0) cfg.seed = std::uint64_t(opts.seed);
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.workers >= 0) cfg.workers = opts.workers;
  if (!opts.model.empty()) cfg.model = triad::model_from_name(opts.model);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triad-da: stochastic helical triad models with data "
               "assimilation"};
  app.require_subcommand(1);

  CommonOptions opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "integrate a single trajectory and record its energetics");
  CLI::App* ensemble = app.add_subcommand(
      "ensemble", "propagate noise realisations and their moment statistics");
  CLI::App* filter = app.add_subcommand(
      "filter", "run the twin experiment with the SIR particle filter");
  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "sweep noise amplitudes, scoring CRPS and rank histograms");
  CLI::App* repeat = app.add_subcommand(
      "repeat", "average filter diagnostics over independent runs");
  for (CLI::App* cmd : {simulate, ensemble, filter, calibrate, repeat})
    add_common(cmd, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : triad::kExitConfig;
  }

  try {
    const triad::ExperimentConfig cfg = make_config(opts);
    int code = triad::kExitConfig;
    if (simulate->parsed()) code = triad::cmd_simulate(cfg);
    else if (ensemble->parsed()) code = triad::cmd_ensemble(cfg);
    else if (filter->parsed()) code = triad::cmd_filter(cfg);
    else if (calibrate->parsed()) code = triad::cmd_calibrate(cfg);
    else if (repeat->parsed()) code = triad::cmd_repeat(cfg);
    if (code == triad::kExitDiverged)
      std::cerr << "triad-da: trajectory diverged\n";
    if (code == triad::kExitDegenerate)
      std::cerr << "triad-da: filter degeneracy, partial diagnostics written\n";
    return code;
  } catch (const triad::ConfigError& e) {
    std::cerr << "triad-da: " << e.what() << "\n";
    return triad::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "triad-da: " << e.what() << "\n";
    return 1;
  }
}
