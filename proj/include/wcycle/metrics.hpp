#ifndef WCYCLE_METRICS_HPP
#define WCYCLE_METRICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcycle/centrality.hpp"
#include "wcycle/graph.hpp"

namespace wcycle {

enum class TauVariant {
  kPaper,        // 2 (Nc - Nd) / (N (N-1)), ties count as neither
  kTieCorrected  // standard tau-b denominators
};

// Rank correlation between two indicators over the same node universe.
double kendall_tau(const ScoreVector& x, const ScoreVector& y,
                   TauVariant variant = TauVariant::kPaper);

struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // symmetric, unit diagonal
};

CorrelationMatrix correlation_matrix(const std::vector<ScoreVector>& svs,
                                     TauVariant variant = TauVariant::kPaper);

CorrelationMatrix average_correlation_matrix(
    const std::vector<CorrelationMatrix>& matrices);

double jaccard_sets(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

// Mean Jaccard of the target's top-c set against every other indicator's.
double avg_jaccard_against_others(std::size_t target,
                                  const std::vector<ScoreVector>& indicators,
                                  double fraction);

// Fraction of the top-ceil(f*N) nodes whose score value occurs exactly once
// within that set; scores compared at 12 significant digits.
double individuation(const ScoreVector& sv, double top_fraction);

// Dense ranks over the top set (equal scores share a rank) -> node count.
std::map<int, int> shared_rank_frequency(const ScoreVector& sv,
                                         double top_fraction);

// Mean hop distance over connected seed pairs; nullopt when no pair connects.
std::optional<double> dispersion(const WeightedGraph& g, const SeedSet& seeds);

// Jaccard overlap of neighbor sets.
double structural_similarity(const WeightedGraph& g, NodeId i, NodeId j);

double avg_structural_similarity(const WeightedGraph& g, const SeedSet& seeds);

enum class CostBinning {
  kSqrtN,  // ceil(sqrt(N)) equal-width strength bins
  kExact   // exact strength match (integer-weight networks)
};

// lambda = sum over seeds of s / p(s) with p the empirical strength-bin
// probability.
double activation_cost(const WeightedGraph& g, const SeedSet& seeds,
                       CostBinning binning = CostBinning::kSqrtN);

// 12-significant-digit key used wherever score equality must be decided.
std::string score_key(double x);

}  // namespace wcycle

#endif
