#ifndef WCYCLE_CYCLE_BASIS_HPP
#define WCYCLE_CYCLE_BASIS_HPP

#include <iosfwd>
#include <vector>

#include "wcycle/graph.hpp"

namespace wcycle {

// Fundamental cycle: one non-tree edge plus the tree path between its
// endpoints. Edges form a closed simple walk starting with the generator.
struct BasicCycle {
  Edge generator;            // the unique non-tree edge (u < v)
  std::vector<Edge> edges;   // walk order; edges[0] == generator
  std::vector<NodeId> nodes; // ascending
  double weight_sum = 0;
};

class CycleBasis {
 public:
  CycleBasis() = default;
  CycleBasis(std::vector<BasicCycle> cycles, NodeId n_nodes);

  const std::vector<BasicCycle>& cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }

  // Cycle indices containing v, ascending.
  const std::vector<int>& cycles_containing(NodeId v) const;

 private:
  std::vector<BasicCycle> cycles_;
  std::vector<std::vector<int>> node_index_;
};

// One cycle per non-tree edge, ordered by ascending generator (u, v).
// |B| = E - N + components. Throws ComputeError if the forest does not
// belong to g.
CycleBasis cycle_basis(const WeightedGraph& g, const SpanningForest& forest);

double cycle_weight(const BasicCycle& c);

// CSV rows: index, generator endpoints, length, weight_sum, node labels
// joined with ';'.
void dump_cycles_csv(const WeightedGraph& g, const CycleBasis& basis,
                     std::ostream& out);

}  // namespace wcycle

#endif
