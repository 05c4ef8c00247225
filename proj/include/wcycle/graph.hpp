#ifndef WCYCLE_GRAPH_HPP
#define WCYCLE_GRAPH_HPP

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wcycle {

using NodeId = std::int32_t;

struct Edge {
  NodeId u;  // u < v always
  NodeId v;
  double w;
};

struct IngestOptions {
  // Weight assigned to 2-token lines.
  double default_weight = 1.0;
};

// Simple undirected graph with positive edge weights. Node ids are dense
// 0..N-1 in first-seen order of the source labels; the original labels are
// kept for output. Immutable once built, safe to share across threads.
class WeightedGraph {
 public:
  static WeightedGraph parse_edge_list(std::istream& in,
                                       const IngestOptions& opts = {});
  static WeightedGraph parse_edge_list(const std::string& text,
                                       const IngestOptions& opts = {});
  static WeightedGraph load_file(const std::string& path,
                                 const IngestOptions& opts = {});

  // Test/generator entry point: n nodes (labels "0".."n-1"), edges given as
  // (u, v, w) triples. Same merge/drop rules as the parser.
  static WeightedGraph from_edges(
      NodeId n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges);

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(edges_.size());
  }

  // Edges sorted ascending by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of v sorted ascending by neighbor id.
  const std::vector<std::pair<NodeId, double>>& neighbors(NodeId v) const {
    check_node(v);
    return adj_[v];
  }

  int degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(adj_[v].size());
  }

  // Strength: sum of incident edge weights, 0 for isolated nodes.
  double strength(NodeId v) const;

  std::optional<double> edge_weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const {
    return edge_weight(u, v).has_value();
  }

  const std::string& label(NodeId v) const {
    check_node(v);
    return labels_[v];
  }
  std::optional<NodeId> node_by_label(const std::string& label) const;

  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  // "u v w" lines with original labels, weights at 17 significant digits.
  void serialize(std::ostream& out) const;
  std::string serialize() const;

  bool operator==(const WeightedGraph& other) const {
    return labels_ == other.labels_ && same_edges(other);
  }

 private:
  void check_node(NodeId v) const;
  bool same_edges(const WeightedGraph& other) const;
  void finalize(std::vector<std::string> labels,
                std::unordered_map<std::string, NodeId> index,
                const std::vector<std::pair<std::pair<NodeId, NodeId>, double>>&
                    merged_edges,
                std::size_t dropped);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::size_t dropped_self_loops_ = 0;
};

struct GraphStats {
  std::int64_t n_nodes = 0;
  std::int64_t n_edges = 0;
  double mean_degree = 0;     // <k> = 2E/N
  double mean_sq_degree = 0;  // <k^2>
  double mean_weight = 0;     // <w>
  double density = 0;         // 2E / (N (N-1))
  double clustering = 0;      // mean unweighted local clustering
};

GraphStats graph_stats(const WeightedGraph& g);

// Deterministic BFS forest: components rooted at their smallest node id,
// neighbors explored in ascending id order.
struct SpanningForest {
  std::vector<NodeId> parent;     // -1 at roots
  std::vector<int> depth;         // 0 at roots
  std::vector<int> component;     // dense component ids, ascending root order
  std::vector<Edge> tree_edges;   // discovery order
  int components = 0;

  bool is_tree_edge(NodeId u, NodeId v) const {
    return parent[u] == v || parent[v] == u;
  }
};

SpanningForest spanning_forest(const WeightedGraph& g);

// BFS hop counts; nullopt marks unreachable nodes.
std::vector<std::optional<int>> hop_distances(const WeightedGraph& g,
                                              NodeId source);

// Single-source shortest paths under edge length 1/w, with shortest-path
// counts per target. Path lengths within relative tolerance 1e-12 tie.
struct ShortestPaths {
  std::vector<std::optional<double>> dist;
  std::vector<double> path_count;  // 0 for unreachable, 1 for the source
};

ShortestPaths weighted_distances(const WeightedGraph& g, NodeId source);

// Relative path-length tie tolerance shared by Dijkstra and betweenness.
inline constexpr double kPathTieTol = 1e-12;
inline bool path_lengths_equal(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return a == b;
  double scale = a > b ? a : b;
  if (scale < 1.0) scale = 1.0;
  double diff = a > b ? a - b : b - a;
  return diff <= kPathTieTol * scale;
}

// Shortest-round-trip / fixed-precision double formatting helpers.
std::string format_double(double x);              // shortest round-trip
std::string format_double(double x, int digits);  // N significant digits

}  // namespace wcycle

#endif
