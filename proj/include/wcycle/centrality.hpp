#ifndef WCYCLE_CENTRALITY_HPP
#define WCYCLE_CENTRALITY_HPP

#include <string>
#include <vector>

#include "wcycle/cycle_basis.hpp"
#include "wcycle/graph.hpp"

namespace wcycle {

// Per-node scores of one indicator plus a deterministic ranking
// (score descending, ties by ascending node id).
struct ScoreVector {
  std::string name;
  std::vector<double> scores;   // indexed by node id
  std::vector<NodeId> ranking;  // permutation of 0..N-1

  static ScoreVector from_scores(std::string name, std::vector<double> scores);
};

// Top-ceil(c*N) nodes of a ranking.
struct SeedSet {
  double fraction = 0;
  std::vector<NodeId> members;  // ranking order
};

// WCycle_i = (1/|B|) * sum of weight sums of basic cycles containing i.
// All zeros when the basis is empty.
ScoreVector wcycle_centrality(const WeightedGraph& g, const CycleBasis& basis);

// WD: node strength.
ScoreVector weighted_degree(const WeightedGraph& g);

// WH: largest y such that the total edge weight to neighbors of strength
// >= y is at least y. Computed by sorting neighbors by strength descending
// and maximizing min(cumulative weight, strength threshold).
ScoreVector weighted_h_index(const WeightedGraph& g);

double weighted_h_index_node(const WeightedGraph& g, NodeId v);

struct CorenessParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// Generalized peeling over k' = (k^alpha * s^beta)^(1/(alpha+beta)):
// repeatedly remove the node with the smallest current k' (ties by id);
// coreness is the running maximum of that minimum at removal time.
ScoreVector weighted_coreness(const WeightedGraph& g,
                              const CorenessParams& params = {});

// Brandes accumulation under edge length 1/w; unordered endpoint pairs,
// endpoints excluded, no normalization.
ScoreVector weighted_betweenness(const WeightedGraph& g, int threads = 1);

SeedSet top_k(const ScoreVector& sv, double fraction);

// ceil(c*N) with a guard against float noise like 0.05*100 -> 5.0000000001.
std::size_t seed_count(double fraction, std::size_t n);

}  // namespace wcycle

#endif
