#include "wcycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include "wcycle/errors.hpp"

namespace wcycle {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string normalized = line;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream iss(normalized);
  std::vector<std::string> out;
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

double parse_weight(const std::string& tok, std::size_t line_no) {
  double w = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "non-numeric weight '" + tok + "'");
  if (!std::isfinite(w)) throw ParseError(line_no, "non-finite weight");
  if (w <= 0.0) throw ParseError(line_no, "weight must be > 0, got " + tok);
  return w;
}

}  // namespace

void WeightedGraph::check_node(NodeId v) const {
  if (v < 0 || v >= node_count())
    throw ComputeError("unknown node id " + std::to_string(v));
}

void WeightedGraph::finalize(
    std::vector<std::string> labels,
    std::unordered_map<std::string, NodeId> index,
    const std::vector<std::pair<std::pair<NodeId, NodeId>, double>>&
        merged_edges,
    std::size_t dropped) {
  labels_ = std::move(labels);
  label_index_ = std::move(index);
  dropped_self_loops_ = dropped;
  edges_.reserve(merged_edges.size());
  for (const auto& [uv, w] : merged_edges)
    edges_.push_back({uv.first, uv.second, w});
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  adj_.assign(labels_.size(), {});
  for (const Edge& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

WeightedGraph WeightedGraph::parse_edge_list(std::istream& in,
                                             const IngestOptions& opts) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::map<std::pair<NodeId, NodeId>, double> weights;
  std::vector<std::pair<NodeId, NodeId>> order;
  std::size_t dropped = 0;

  auto intern = [&](const std::string& label) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels.size());
    labels.push_back(label);
    index.emplace(label, id);
    return id;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    auto tokens = tokenize(line);
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError(line_no, "expected 2 or 3 tokens, got " +
                                    std::to_string(tokens.size()));
    double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no)
                                  : opts.default_weight;
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    if (u == v) {
      ++dropped;
      continue;
    }
    auto key = std::minmax(u, v);
    auto [it, inserted] = weights.emplace(key, w);
    if (!inserted)
      it->second += w;  // duplicates and reverse-direction lines merge
  }

  if (labels.empty()) throw IoError("empty edge list: no data lines found");

  WeightedGraph g;
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> merged(
      weights.begin(), weights.end());
  g.finalize(std::move(labels), std::move(index), merged, dropped);
  return g;
}

WeightedGraph WeightedGraph::parse_edge_list(const std::string& text,
                                             const IngestOptions& opts) {
  std::istringstream iss(text);
  return parse_edge_list(iss, opts);
}

WeightedGraph WeightedGraph::load_file(const std::string& path,
                                       const IngestOptions& opts) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  try {
    return parse_edge_list(in, opts);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

WeightedGraph WeightedGraph::from_edges(
    NodeId n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
  if (n < 1) throw ConfigError("from_edges: need at least one node");
  std::vector<std::string> labels(n);
  std::unordered_map<std::string, NodeId> index;
  for (NodeId i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    index.emplace(labels[i], i);
  }
  std::map<std::pair<NodeId, NodeId>, double> weights;
  std::size_t dropped = 0;
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ConfigError("from_edges: node id out of range");
    if (!std::isfinite(w) || w <= 0)
      throw ConfigError("from_edges: weight must be finite and > 0");
    if (u == v) {
      ++dropped;
      continue;
    }
    auto key = std::minmax(u, v);
    auto [it, inserted] = weights.emplace(key, w);
    if (!inserted) it->second += w;
  }
  WeightedGraph g;
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> merged(
      weights.begin(), weights.end());
  g.finalize(std::move(labels), std::move(index), merged, dropped);
  return g;
}

double WeightedGraph::strength(NodeId v) const {
  check_node(v);
  double s = 0;
  for (const auto& [_, w] : adj_[v]) s += w;
  return s;
}

std::optional<double> WeightedGraph::edge_weight(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nbrs = adj_[u];
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), v,
      [](const std::pair<NodeId, double>& a, NodeId b) { return a.first < b; });
  if (it == nbrs.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::optional<NodeId> WeightedGraph::node_by_label(
    const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_double(double x, int digits) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general,
                    digits);
  return std::string(buf, ptr);
}

void WeightedGraph::serialize(std::ostream& out) const {
  for (const Edge& e : edges_)
    out << labels_[e.u] << ' ' << labels_[e.v] << ' ' << format_double(e.w, 17)
        << '\n';
}

std::string WeightedGraph::serialize() const {
  std::ostringstream oss;
  serialize(oss);
  return oss.str();
}

bool WeightedGraph::same_edges(const WeightedGraph& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.u != b.u || a.v != b.v || a.w != b.w) return false;
  }
  return true;
}

GraphStats graph_stats(const WeightedGraph& g) {
  const NodeId n = g.node_count();
  if (n < 1) throw ComputeError("graph_stats: empty graph");
  GraphStats st;
  st.n_nodes = n;
  st.n_edges = g.edge_count();
  double sum_k = 0, sum_k2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    double k = g.degree(v);
    sum_k += k;
    sum_k2 += k * k;
  }
  st.mean_degree = sum_k / n;
  st.mean_sq_degree = sum_k2 / n;
  double sum_w = 0;
  for (const Edge& e : g.edges()) sum_w += e.w;
  st.mean_weight = st.n_edges > 0 ? sum_w / st.n_edges : 0.0;
  st.density = n > 1 ? 2.0 * st.n_edges / (double(n) * (n - 1)) : 0.0;

  double clustering_sum = 0;
  for (NodeId v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors(v);
    const int k = static_cast<int>(nbrs.size());
    if (k < 2) continue;  // contributes 0
    int links = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (g.has_edge(nbrs[i].first, nbrs[j].first)) ++links;
    clustering_sum += 2.0 * links / (double(k) * (k - 1));
  }
  st.clustering = clustering_sum / n;
  return st;
}

SpanningForest spanning_forest(const WeightedGraph& g) {
  const NodeId n = g.node_count();
  SpanningForest f;
  f.parent.assign(n, -1);
  f.depth.assign(n, 0);
  f.component.assign(n, -1);
  for (NodeId root = 0; root < n; ++root) {
    if (f.component[root] >= 0) continue;
    const int comp = f.components++;
    f.component[root] = comp;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (const auto& [v, w] : g.neighbors(u)) {
        if (f.component[v] >= 0) continue;
        f.component[v] = comp;
        f.parent[v] = u;
        f.depth[v] = f.depth[u] + 1;
        f.tree_edges.push_back({std::min(u, v), std::max(u, v), w});
        queue.push_back(v);
      }
    }
  }
  return f;
}

std::vector<std::optional<int>> hop_distances(const WeightedGraph& g,
                                              NodeId source) {
  const NodeId n = g.node_count();
  if (source < 0 || source >= n)
    throw ComputeError("hop_distances: unknown node " + std::to_string(source));
  std::vector<std::optional<int>> dist(n);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (const auto& [v, w] : g.neighbors(u)) {
      if (dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

ShortestPaths weighted_distances(const WeightedGraph& g, NodeId source) {
  const NodeId n = g.node_count();
  if (source < 0 || source >= n)
    throw ComputeError("weighted_distances: unknown node " +
                       std::to_string(source));
  ShortestPaths sp;
  sp.dist.assign(n, std::nullopt);
  sp.path_count.assign(n, 0.0);
  std::vector<char> settled(n, 0);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  sp.dist[source] = 0.0;
  sp.path_count[source] = 1.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const auto& [v, w] : g.neighbors(u)) {
      const double cand = d + 1.0 / w;
      if (!sp.dist[v] ||
          (cand < *sp.dist[v] && !path_lengths_equal(cand, *sp.dist[v]))) {
        sp.dist[v] = cand;
        sp.path_count[v] = sp.path_count[u];
        pq.emplace(cand, v);
      } else if (path_lengths_equal(cand, *sp.dist[v]) && !settled[v]) {
        sp.path_count[v] += sp.path_count[u];
      }
    }
  }
  return sp;
}

}  // namespace wcycle
