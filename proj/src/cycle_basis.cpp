#include "wcycle/cycle_basis.hpp"

#include <algorithm>
#include <ostream>

#include "wcycle/errors.hpp"

namespace wcycle {

CycleBasis::CycleBasis(std::vector<BasicCycle> cycles, NodeId n_nodes)
    : cycles_(std::move(cycles)), node_index_(n_nodes) {
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    for (NodeId v : cycles_[i].nodes)
      node_index_[v].push_back(static_cast<int>(i));
}

const std::vector<int>& CycleBasis::cycles_containing(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= node_index_.size())
    throw ComputeError("cycles_containing: unknown node " + std::to_string(v));
  return node_index_[v];
}

double cycle_weight(const BasicCycle& c) {
  double sum = 0;
  for (const Edge& e : c.edges) sum += e.w;
  return sum;
}

namespace {

Edge tree_edge(const WeightedGraph& g, NodeId child, NodeId parent) {
  auto w = g.edge_weight(child, parent);
  if (!w)
    throw ComputeError("cycle_basis: forest edge (" + std::to_string(child) +
                       "," + std::to_string(parent) + ") not present in graph");
  return {std::min(child, parent), std::max(child, parent), *w};
}

// Walk parent pointers from s and t to their lowest common ancestor.
// Returns the cycle edges in closed-walk order starting with the generator.
BasicCycle build_cycle(const WeightedGraph& g, const SpanningForest& f,
                       const Edge& generator) {
  NodeId s = generator.u, t = generator.v;
  std::vector<Edge> up_from_t;  // t towards the LCA
  std::vector<Edge> up_from_s;  // s towards the LCA
  NodeId a = t, b = s;
  while (f.depth[a] > f.depth[b]) {
    up_from_t.push_back(tree_edge(g, a, f.parent[a]));
    a = f.parent[a];
  }
  while (f.depth[b] > f.depth[a]) {
    up_from_s.push_back(tree_edge(g, b, f.parent[b]));
    b = f.parent[b];
  }
  while (a != b) {
    up_from_t.push_back(tree_edge(g, a, f.parent[a]));
    up_from_s.push_back(tree_edge(g, b, f.parent[b]));
    a = f.parent[a];
    b = f.parent[b];
  }

  BasicCycle c;
  c.generator = generator;
  c.edges.push_back(generator);
  c.edges.insert(c.edges.end(), up_from_t.begin(), up_from_t.end());
  c.edges.insert(c.edges.end(), up_from_s.rbegin(), up_from_s.rend());
  c.weight_sum = cycle_weight(c);

  c.nodes.push_back(s);
  c.nodes.push_back(t);
  NodeId x = t;
  for (std::size_t i = 0; i < up_from_t.size(); ++i) {
    x = f.parent[x];
    c.nodes.push_back(x);
  }
  x = s;
  for (std::size_t i = 0; i + 1 < up_from_s.size(); ++i) {
    x = f.parent[x];
    c.nodes.push_back(x);
  }
  std::sort(c.nodes.begin(), c.nodes.end());
  c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
  return c;
}

}  // namespace

CycleBasis cycle_basis(const WeightedGraph& g, const SpanningForest& forest) {
  const NodeId n = g.node_count();
  if (static_cast<NodeId>(forest.parent.size()) != n)
    throw ComputeError("cycle_basis: forest size does not match graph");
  for (NodeId v = 0; v < n; ++v)
    if (forest.parent[v] >= 0 && !g.has_edge(v, forest.parent[v]))
      throw ComputeError("cycle_basis: forest edge (" + std::to_string(v) +
                         "," + std::to_string(forest.parent[v]) +
                         ") not present in graph");

  std::vector<BasicCycle> cycles;
  // g.edges() is already sorted by (u, v), which fixes the cycle order.
  for (const Edge& e : g.edges()) {
    if (forest.is_tree_edge(e.u, e.v)) continue;
    cycles.push_back(build_cycle(g, forest, e));
  }
  const std::int64_t expected =
      g.edge_count() - n + forest.components;
  if (static_cast<std::int64_t>(cycles.size()) != expected)
    throw ComputeError("cycle_basis: dimension mismatch (got " +
                       std::to_string(cycles.size()) + ", expected " +
                       std::to_string(expected) + ")");
  return CycleBasis(std::move(cycles), n);
}

void dump_cycles_csv(const WeightedGraph& g, const CycleBasis& basis,
                     std::ostream& out) {
  out << "cycle,generator_u,generator_v,length,weight_sum,nodes\n";
  const auto& cycles = basis.cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const BasicCycle& c = cycles[i];
    out << i << ',' << g.label(c.generator.u) << ',' << g.label(c.generator.v)
        << ',' << c.edges.size() << ',' << format_double(c.weight_sum) << ',';
    for (std::size_t j = 0; j < c.nodes.size(); ++j) {
      if (j) out << ';';
      out << g.label(c.nodes[j]);
    }
    out << '\n';
  }
}

}  // namespace wcycle
