#ifndef WCYCLE_EXPERIMENT_HPP
#define WCYCLE_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wcycle/centrality.hpp"
#include "wcycle/graph.hpp"
#include "wcycle/metrics.hpp"
#include "wcycle/wsir.hpp"

namespace wcycle {

struct DatasetSpec {
  std::string name;
  std::string path;
};

struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<std::string> indicators = {"WCycle", "WD", "WH", "WC", "WBC"};
  std::vector<double> seed_fractions = {0.01, 0.02, 0.03, 0.04, 0.05};
  std::vector<double> cost_fractions = {0.02, 0.03, 0.04, 0.05,
                                        0.06, 0.07, 0.08, 0.09, 0.10};
  std::vector<double> beta_multipliers = {1.0, 1.5, 2.0, 2.5, 3.0};
  double spread_fixed_multiplier = 1.5;  // scenario A
  double spread_fixed_fraction = 0.03;   // scenario B
  double overlap_fraction = 0.05;        // top-k% for the overlap table
  bool dump_run_sizes = false;
  double mu = 0.5;
  int runs = 300;
  std::uint64_t master_seed = 20240101;
  std::string out_dir = "out";
  TauVariant tau_variant = TauVariant::kPaper;
  CostBinning cost_binning = CostBinning::kSqrtN;
  InfectionModel sir_variant = InfectionModel::kLinearClamped;
  CorenessParams coreness;
  double individuation_fraction_large = 0.30;
  double individuation_fraction_small = 0.50;
  int small_network_threshold = 500;  // N below this uses the small fraction
  int threads = 1;

  void validate() const;  // throws ConfigError

  static ExperimentConfig from_json_file(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);
  // Canonical serialized form; hashed into the manifest.
  std::string canonical_json() const;
};

// Plugin point: additional indicators can be registered by name and then
// listed in ExperimentConfig::indicators.
using IndicatorFn = std::function<ScoreVector(const WeightedGraph&,
                                              const ExperimentConfig&)>;
void register_indicator(const std::string& name, IndicatorFn fn);
bool indicator_registered(const std::string& name);

// Score vectors for every configured indicator, in config order.
std::vector<ScoreVector> compute_indicators(const WeightedGraph& g,
                                            const ExperimentConfig& cfg);

// Pipeline stages. Each writes CSV files under cfg.out_dir.
void run_stats(const ExperimentConfig& cfg);
void run_centrality(const ExperimentConfig& cfg);
void run_evaluate(const ExperimentConfig& cfg);
void run_spread(const ExperimentConfig& cfg);
// stats -> centrality -> evaluate -> spread, then writes manifest.json.
void run_reproduce(const ExperimentConfig& cfg);

// FNV-1a 64 content hash, hex encoded; used for config and dataset
// fingerprints in the manifest.
std::string content_hash(const std::string& bytes);
std::string file_hash(const std::string& path);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace wcycle

#endif
