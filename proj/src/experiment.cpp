#include "wcycle/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wcycle/errors.hpp"

namespace wcycle {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string tau_name(TauVariant v) {
  return v == TauVariant::kPaper ? "paper" : "tie-corrected";
}

std::string binning_name(CostBinning b) {
  return b == CostBinning::kSqrtN ? "sqrt-n" : "exact";
}

std::string sir_name(InfectionModel m) {
  return m == InfectionModel::kLinearClamped ? "linear-clamped" : "complement";
}

TauVariant parse_tau(const std::string& s) {
  if (s == "paper") return TauVariant::kPaper;
  if (s == "tie-corrected") return TauVariant::kTieCorrected;
  throw ConfigError("unknown tau_variant: " + s);
}

CostBinning parse_binning(const std::string& s) {
  if (s == "sqrt-n") return CostBinning::kSqrtN;
  if (s == "exact") return CostBinning::kExact;
  throw ConfigError("unknown cost_binning: " + s);
}

InfectionModel parse_sir(const std::string& s) {
  if (s == "linear-clamped") return InfectionModel::kLinearClamped;
  if (s == "complement") return InfectionModel::kComplement;
  throw ConfigError("unknown sir_variant: " + s);
}

std::ofstream open_output(const ExperimentConfig& cfg,
                          const std::string& file) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  const fs::path path = fs::path(cfg.out_dir) / file;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  return out;
}

struct LoadedNetwork {
  std::string name;
  WeightedGraph graph;
};

std::vector<LoadedNetwork> load_networks(const ExperimentConfig& cfg) {
  std::vector<LoadedNetwork> nets;
  for (const auto& ds : cfg.datasets)
    nets.push_back({ds.name, WeightedGraph::load_file(ds.path)});
  return nets;
}

std::map<std::string, IndicatorFn>& registry() {
  static std::map<std::string, IndicatorFn> reg = {
      {"WCycle",
       [](const WeightedGraph& g, const ExperimentConfig&) {
         return wcycle_centrality(g, cycle_basis(g, spanning_forest(g)));
       }},
      {"WD",
       [](const WeightedGraph& g, const ExperimentConfig&) {
         return weighted_degree(g);
       }},
      {"WH",
       [](const WeightedGraph& g, const ExperimentConfig&) {
         return weighted_h_index(g);
       }},
      {"WC",
       [](const WeightedGraph& g, const ExperimentConfig& cfg) {
         return weighted_coreness(g, cfg.coreness);
       }},
      {"WBC",
       [](const WeightedGraph& g, const ExperimentConfig& cfg) {
         return weighted_betweenness(g, cfg.threads);
       }},
  };
  return reg;
}

double individuation_fraction(const ExperimentConfig& cfg, NodeId n) {
  return n < cfg.small_network_threshold ? cfg.individuation_fraction_small
                                         : cfg.individuation_fraction_large;
}

}  // namespace

void register_indicator(const std::string& name, IndicatorFn fn) {
  registry()[name] = std::move(fn);
}

bool indicator_registered(const std::string& name) {
  return registry().count(name) > 0;
}

std::vector<ScoreVector> compute_indicators(const WeightedGraph& g,
                                            const ExperimentConfig& cfg) {
  std::vector<ScoreVector> out;
  for (const std::string& name : cfg.indicators) {
    auto it = registry().find(name);
    if (it == registry().end())
      throw ConfigError("unknown indicator: " + name);
    ScoreVector sv = it->second(g, cfg);
    sv.name = name;
    out.push_back(std::move(sv));
  }
  return out;
}

void ExperimentConfig::validate() const {
  std::map<std::string, int> seen;
  for (const auto& ds : datasets) {
    if (ds.name.empty() || ds.path.empty())
      throw ConfigError("dataset entries need both name and path");
    if (++seen[ds.name] > 1)
      throw ConfigError("duplicate dataset name: " + ds.name);
  }
  if (indicators.empty()) throw ConfigError("indicator list is empty");
  for (const auto& name : indicators)
    if (!indicator_registered(name))
      throw ConfigError("unknown indicator: " + name);
  auto check_fractions = [](const std::vector<double>& fs, const char* what) {
    for (double f : fs)
      if (!(f > 0.0) || f > 1.0)
        throw ConfigError(std::string(what) + " must lie in (0, 1]");
  };
  check_fractions(seed_fractions, "seed_fractions");
  check_fractions(cost_fractions, "cost_fractions");
  check_fractions({spread_fixed_fraction}, "spread_fixed_fraction");
  check_fractions({overlap_fraction}, "overlap_fraction");
  for (double m : beta_multipliers)
    if (!(m >= 0.0)) throw ConfigError("beta_multipliers must be >= 0");
  if (!(spread_fixed_multiplier >= 0.0))
    throw ConfigError("spread_fixed_multiplier must be >= 0");
  if (!(mu > 0.0) || mu > 1.0) throw ConfigError("mu must be in (0, 1]");
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (out_dir.empty()) throw ConfigError("out_dir is empty");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("datasets"))
      for (const auto& d : j.at("datasets"))
        cfg.datasets.push_back({d.at("name").get<std::string>(),
                                d.at("path").get<std::string>()});
    if (j.contains("indicators"))
      cfg.indicators = j.at("indicators").get<std::vector<std::string>>();
    if (j.contains("seed_fractions"))
      cfg.seed_fractions = j.at("seed_fractions").get<std::vector<double>>();
    if (j.contains("cost_fractions"))
      cfg.cost_fractions = j.at("cost_fractions").get<std::vector<double>>();
    if (j.contains("beta_multipliers"))
      cfg.beta_multipliers =
          j.at("beta_multipliers").get<std::vector<double>>();
    if (j.contains("spread_fixed_multiplier"))
      cfg.spread_fixed_multiplier = j.at("spread_fixed_multiplier");
    if (j.contains("spread_fixed_fraction"))
      cfg.spread_fixed_fraction = j.at("spread_fixed_fraction");
    if (j.contains("overlap_fraction"))
      cfg.overlap_fraction = j.at("overlap_fraction");
    if (j.contains("dump_run_sizes"))
      cfg.dump_run_sizes = j.at("dump_run_sizes");
    if (j.contains("mu")) cfg.mu = j.at("mu");
    if (j.contains("runs")) cfg.runs = j.at("runs");
    if (j.contains("master_seed"))
      cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir");
    if (j.contains("tau_variant"))
      cfg.tau_variant = parse_tau(j.at("tau_variant"));
    if (j.contains("cost_binning"))
      cfg.cost_binning = parse_binning(j.at("cost_binning"));
    if (j.contains("sir_variant"))
      cfg.sir_variant = parse_sir(j.at("sir_variant"));
    if (j.contains("coreness_alpha")) cfg.coreness.alpha = j.at("coreness_alpha");
    if (j.contains("coreness_beta")) cfg.coreness.beta = j.at("coreness_beta");
    if (j.contains("individuation_fraction_large"))
      cfg.individuation_fraction_large = j.at("individuation_fraction_large");
    if (j.contains("individuation_fraction_small"))
      cfg.individuation_fraction_small = j.at("individuation_fraction_small");
    if (j.contains("small_network_threshold"))
      cfg.small_network_threshold = j.at("small_network_threshold");
    if (j.contains("threads")) cfg.threads = j.at("threads");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return from_json_text(oss.str());
}

std::string ExperimentConfig::canonical_json() const {
  json j;
  j["datasets"] = json::array();
  for (const auto& ds : datasets)
    j["datasets"].push_back({{"name", ds.name}, {"path", ds.path}});
  j["indicators"] = indicators;
  j["seed_fractions"] = seed_fractions;
  j["cost_fractions"] = cost_fractions;
  j["beta_multipliers"] = beta_multipliers;
  j["spread_fixed_multiplier"] = spread_fixed_multiplier;
  j["spread_fixed_fraction"] = spread_fixed_fraction;
  j["overlap_fraction"] = overlap_fraction;
  j["dump_run_sizes"] = dump_run_sizes;
  j["mu"] = mu;
  j["runs"] = runs;
  j["master_seed"] = master_seed;
  // out_dir and threads are deliberately excluded: neither changes any
  // computed output, so the hash stays stable across machines.
  j["tau_variant"] = tau_name(tau_variant);
  j["cost_binning"] = binning_name(cost_binning);
  j["sir_variant"] = sir_name(sir_variant);
  j["coreness_alpha"] = coreness.alpha;
  j["coreness_beta"] = coreness.beta;
  j["individuation_fraction_large"] = individuation_fraction_large;
  j["individuation_fraction_small"] = individuation_fraction_small;
  j["small_network_threshold"] = small_network_threshold;
  return j.dump(2);
}

std::string content_hash(const std::string& bytes) {
  return hex64(fnv1a(bytes));
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return content_hash(oss.str());
}

void run_stats(const ExperimentConfig& cfg) {
  cfg.validate();
  auto out = open_output(cfg, "stats.csv");
  out << "name,N,E,k_mean,w_mean,D,C\n";
  for (const auto& ds : cfg.datasets) {
    const WeightedGraph g = WeightedGraph::load_file(ds.path);
    const GraphStats st = graph_stats(g);
    out << ds.name << ',' << st.n_nodes << ',' << st.n_edges << ','
        << format_double(st.mean_degree) << ','
        << format_double(st.mean_weight) << ',' << format_double(st.density)
        << ',' << format_double(st.clustering) << '\n';
  }
}

void run_centrality(const ExperimentConfig& cfg) {
  cfg.validate();
  for (const auto& net : load_networks(cfg)) {
    const auto svs = compute_indicators(net.graph, cfg);
    auto out = open_output(cfg, "centrality_" + net.name + ".csv");
    out << "label";
    for (const auto& sv : svs) out << ',' << sv.name << "_score";
    for (const auto& sv : svs) out << ',' << sv.name << "_rank";
    out << '\n';
    const NodeId n = net.graph.node_count();
    std::vector<std::vector<int>> ranks(svs.size(), std::vector<int>(n));
    for (std::size_t i = 0; i < svs.size(); ++i)
      for (NodeId pos = 0; pos < n; ++pos)
        ranks[i][svs[i].ranking[pos]] = pos + 1;
    for (NodeId v = 0; v < n; ++v) {
      out << net.graph.label(v);
      for (const auto& sv : svs) out << ',' << format_double(sv.scores[v]);
      for (std::size_t i = 0; i < svs.size(); ++i) out << ',' << ranks[i][v];
      out << '\n';
    }
  }
}

void run_evaluate(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto nets = load_networks(cfg);

  auto overlap = open_output(cfg, "table2_overlap.csv");
  overlap << "network";
  for (const auto& name : cfg.indicators) overlap << ",J_" << name;
  overlap << '\n';

  auto indiv = open_output(cfg, "table3_individuation.csv");
  indiv << "network,top_fraction";
  for (const auto& name : cfg.indicators) indiv << ",gamma_" << name;
  indiv << '\n';

  auto fig3 = open_output(cfg, "fig3_shared_rank.csv");
  fig3 << "network,indicator,rank,count\n";
  auto fig5 = open_output(cfg, "fig5_dispersion.csv");
  fig5 << "network,indicator,c,dispersion\n";
  auto fig8 = open_output(cfg, "fig8_similarity.csv");
  fig8 << "network,indicator,c,similarity\n";
  auto fig10 = open_output(cfg, "fig10_cost.csv");
  fig10 << "network,indicator,c,lambda,binning\n";

  std::vector<CorrelationMatrix> matrices;
  for (const auto& net : nets) {
    const auto svs = compute_indicators(net.graph, cfg);
    const CorrelationMatrix m = correlation_matrix(svs, cfg.tau_variant);
    matrices.push_back(m);
    auto cm = open_output(cfg, "fig2_correlation_" + net.name + ".csv");
    cm << "indicator";
    for (const auto& name : m.names) cm << ',' << name;
    cm << '\n';
    for (std::size_t i = 0; i < m.names.size(); ++i) {
      cm << m.names[i];
      for (double v : m.values[i]) cm << ',' << format_double(v);
      cm << '\n';
    }

    overlap << net.name;
    for (std::size_t i = 0; i < svs.size(); ++i)
      overlap << ','
              << format_double(
                     avg_jaccard_against_others(i, svs, cfg.overlap_fraction));
    overlap << '\n';

    const double f = individuation_fraction(cfg, net.graph.node_count());
    indiv << net.name << ',' << format_double(f);
    for (const auto& sv : svs)
      indiv << ',' << format_double(individuation(sv, f));
    indiv << '\n';

    for (const auto& sv : svs)
      for (const auto& [rank, count] : shared_rank_frequency(sv, f))
        fig3 << net.name << ',' << sv.name << ',' << rank << ',' << count
             << '\n';

    for (const auto& sv : svs) {
      for (double c : cfg.seed_fractions) {
        const SeedSet seeds = top_k(sv, c);
        fig5 << net.name << ',' << sv.name << ',' << format_double(c) << ',';
        if (seeds.members.size() < 2) {
          fig5 << "NA";
        } else if (auto d = dispersion(net.graph, seeds)) {
          fig5 << format_double(*d);
        } else {
          fig5 << "NA";
        }
        fig5 << '\n';
        fig8 << net.name << ',' << sv.name << ',' << format_double(c) << ',';
        if (seeds.members.size() < 2)
          fig8 << "NA";
        else
          fig8 << format_double(avg_structural_similarity(net.graph, seeds));
        fig8 << '\n';
      }
      for (double c : cfg.cost_fractions)
        fig10 << net.name << ',' << sv.name << ',' << format_double(c) << ','
              << format_double(activation_cost(net.graph, top_k(sv, c),
                                               cfg.cost_binning))
              << ',' << binning_name(cfg.cost_binning) << '\n';
    }
  }

  if (!matrices.empty()) {
    const CorrelationMatrix avg = average_correlation_matrix(matrices);
    auto out = open_output(cfg, "fig2_correlation_avg.csv");
    out << "indicator";
    for (const auto& name : avg.names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < avg.names.size(); ++i) {
      out << avg.names[i];
      for (double v : avg.values[i]) out << ',' << format_double(v);
      out << '\n';
    }
  }
}

void run_spread(const ExperimentConfig& cfg) {
  cfg.validate();
  auto fig6 = open_output(cfg, "fig6_spread_by_fraction.csv");
  fig6 << "network,indicator,c,beta_multiplier,runs,mean_R,std_R\n";
  auto fig7 = open_output(cfg, "fig7_spread_by_beta.csv");
  fig7 << "network,indicator,c,beta_multiplier,runs,mean_R,std_R\n";
  std::ofstream raw;
  if (cfg.dump_run_sizes) {
    raw = open_output(cfg, "spread_run_sizes.csv");
    raw << "network,indicator,scenario,c,beta_multiplier,run,R\n";
  }

  for (const auto& net : load_networks(cfg)) {
    double beta_c = 0;
    try {
      beta_c = epidemic_threshold(net.graph);
    } catch (const ComputeError& e) {
      std::cerr << "spread: skipping " << net.name << ": " << e.what()
                << '\n';
      continue;
    }
    const auto svs = compute_indicators(net.graph, cfg);
    const std::uint64_t net_seed =
        detail::mix_stream(cfg.master_seed, fnv1a(net.name));

    auto cell = [&](std::ofstream& out, const char* scenario,
                    const ScoreVector& sv, double c, double mult) {
      WsirParams params;
      params.beta = mult * beta_c;
      params.mu = cfg.mu;
      params.master_seed = detail::mix_stream(
          net_seed, fnv1a(sv.name), fnv1a(scenario),
          fnv1a(format_double(c) + "/" + format_double(mult)));
      params.model = cfg.sir_variant;
      const SeedSet seeds = top_k(sv, c);
      const OutbreakResult res =
          wsir_average(net.graph, seeds, params, cfg.runs, cfg.threads);
      out << net.name << ',' << sv.name << ',' << format_double(c) << ','
          << format_double(mult) << ',' << res.runs << ','
          << format_double(res.mean_r) << ',' << format_double(res.std_r)
          << '\n';
      if (cfg.dump_run_sizes)
        for (int r = 0; r < res.runs; ++r)
          raw << net.name << ',' << sv.name << ',' << scenario << ','
              << format_double(c) << ',' << format_double(mult) << ',' << r
              << ',' << res.sizes[r] << '\n';
    };

    for (const auto& sv : svs) {
      for (double c : cfg.seed_fractions)
        cell(fig6, "A", sv, c, cfg.spread_fixed_multiplier);
      for (double mult : cfg.beta_multipliers)
        cell(fig7, "B", sv, cfg.spread_fixed_fraction, mult);
    }
  }
}

void run_reproduce(const ExperimentConfig& cfg) {
  cfg.validate();
  auto stage = [&](const char* name, void (*fn)(const ExperimentConfig&)) {
    try {
      fn(cfg);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("stage ") + name + ": " + e.what());
    } catch (const IoError& e) {
      throw IoError(std::string("stage ") + name + ": " + e.what());
    } catch (const std::exception& e) {
      throw ComputeError(std::string("stage ") + name + ": " + e.what());
    }
  };
  stage("stats", &run_stats);
  stage("centrality", &run_centrality);
  stage("evaluate", &run_evaluate);
  stage("spread", &run_spread);

  json manifest;
  manifest["tool_version"] = kToolVersion;
  manifest["config_hash"] = content_hash(cfg.canonical_json());
  manifest["datasets"] = json::array();
  for (const auto& ds : cfg.datasets)
    manifest["datasets"].push_back({{"name", ds.name},
                                    {"path", ds.path},
                                    {"checksum", file_hash(ds.path)}});
  auto out = open_output(cfg, "manifest.json");
  out << manifest.dump(2) << '\n';
}

}  // namespace wcycle
