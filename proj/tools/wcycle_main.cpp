#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wcycle/errors.hpp"
#include "wcycle/experiment.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::string out_dir;
  std::string tau_variant;
  std::string cost_binning;
  std::string sir_variant;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  int runs = 0;
};

wcycle::ExperimentConfig build_config(const CliOverrides& cli) {
  wcycle::ExperimentConfig cfg;
  if (!cli.config_path.empty())
    cfg = wcycle::ExperimentConfig::from_json_file(cli.config_path);
  // flags win over the config file
  if (!cli.out_dir.empty()) cfg.out_dir = cli.out_dir;
  if (cli.seed_set) cfg.master_seed = cli.seed;
  if (cli.threads > 0) cfg.threads = cli.threads;
  if (cli.runs > 0) cfg.runs = cli.runs;
  if (!cli.tau_variant.empty())
    cfg.tau_variant = cli.tau_variant == "paper"
                          ? wcycle::TauVariant::kPaper
                          : wcycle::TauVariant::kTieCorrected;
  if (!cli.cost_binning.empty())
    cfg.cost_binning = cli.cost_binning == "sqrt-n"
                           ? wcycle::CostBinning::kSqrtN
                           : wcycle::CostBinning::kExact;
  if (!cli.sir_variant.empty())
    cfg.sir_variant = cli.sir_variant == "linear-clamped"
                          ? wcycle::InfectionModel::kLinearClamped
                          : wcycle::InfectionModel::kComplement;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-network influence analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // let shared flags appear after the subcommand

  CliOverrides cli;
  app.add_option("--config", cli.config_path, "JSON experiment config");
  app.add_option("--out-dir", cli.out_dir, "output directory override");
  auto* seed_opt =
      app.add_option("--seed", cli.seed, "master RNG seed override");
  app.add_option("--threads", cli.threads, "worker thread count");
  app.add_option("--runs", cli.runs, "WSIR repetitions override");
  app.add_option("--tau-variant", cli.tau_variant, "paper | tie-corrected")
      ->check(CLI::IsMember({"paper", "tie-corrected"}));
  app.add_option("--cost-binning", cli.cost_binning, "sqrt-n | exact")
      ->check(CLI::IsMember({"sqrt-n", "exact"}));
  app.add_option("--sir-variant", cli.sir_variant,
                 "linear-clamped | complement")
      ->check(CLI::IsMember({"linear-clamped", "complement"}));

  auto* stats = app.add_subcommand("stats", "network summary table");
  auto* centrality =
      app.add_subcommand("centrality", "per-network indicator scores");
  auto* evaluate =
      app.add_subcommand("evaluate", "correlation/overlap/dispersion reports");
  auto* spread = app.add_subcommand("spread", "WSIR spreading experiments");
  auto* reproduce =
      app.add_subcommand("reproduce", "full pipeline plus manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    cli.seed_set = seed_opt->count() > 0;
    const wcycle::ExperimentConfig cfg = build_config(cli);
    if (stats->parsed()) wcycle::run_stats(cfg);
    if (centrality->parsed()) wcycle::run_centrality(cfg);
    if (evaluate->parsed()) wcycle::run_evaluate(cfg);
    if (spread->parsed()) wcycle::run_spread(cfg);
    if (reproduce->parsed()) wcycle::run_reproduce(cfg);
    return 0;
  } catch (const wcycle::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const wcycle::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
