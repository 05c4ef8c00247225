// Independent brute-force reference implementations used by the unit and
// acceptance suites. These deliberately avoid the library's algorithmic
// paths (LCA walks, Brandes accumulation, sorted-cumulative h-index,
// Fenwick pair counting) and recompute everything the slow way.
#ifndef WCYCLE_TESTS_ORACLES_HPP
#define WCYCLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "wcycle/graph.hpp"

namespace oracles {

using wcycle::NodeId;
using wcycle::WeightedGraph;

// Deterministic generator for test inputs (splitmix64).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  int below(int n) { return int(next() % std::uint64_t(n)); }

 private:
  std::uint64_t state_;
};

// Connected graph: random spanning tree plus `extra` random chords,
// weights uniform in (0.1, 2.1).
inline WeightedGraph random_connected_graph(int n, int extra, TestRng& rng) {
  std::vector<std::tuple<NodeId, NodeId, double>> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (NodeId v = 1; v < n; ++v) {
    NodeId u = NodeId(rng.below(v));
    edges.emplace_back(u, v, 0.1 + 2.0 * rng.uniform());
    seen.insert({std::min(u, v), std::max(u, v)});
  }
  for (int tries = 0; extra > 0 && tries < 50 * extra; ++tries) {
    NodeId u = NodeId(rng.below(n)), v = NodeId(rng.below(n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) continue;
    edges.emplace_back(u, v, 0.1 + 2.0 * rng.uniform());
    --extra;
  }
  return WeightedGraph::from_edges(n, edges);
}

inline WeightedGraph random_graph(int n, double p, TestRng& rng) {
  std::vector<std::tuple<NodeId, NodeId, double>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.uniform() < p)
        edges.emplace_back(u, v, 0.1 + 2.0 * rng.uniform());
  return WeightedGraph::from_edges(n, edges);
}

// --- WCycle: brute-force evaluation over the shared BFS-forest rule -----

struct BruteCycle {
  std::set<NodeId> nodes;
  double weight_sum = 0;
};

// Re-derives the deterministic forest and basis with plain containers and
// a per-chord BFS over tree edges instead of the library's parent walk.
inline std::vector<BruteCycle> brute_cycle_basis(const WeightedGraph& g) {
  const NodeId n = g.node_count();
  std::set<std::pair<NodeId, NodeId>> tree;
  std::vector<char> visited(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::deque<NodeId> q{root};
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (const auto& [v, w] : g.neighbors(u)) {
        if (visited[v]) continue;
        visited[v] = 1;
        tree.insert(std::minmax(u, v));
        q.push_back(v);
      }
    }
  }

  std::vector<BruteCycle> cycles;
  for (const auto& e : g.edges()) {
    if (tree.count({e.u, e.v})) continue;
    // BFS from e.u to e.v restricted to tree edges
    std::vector<NodeId> prev(n, -1);
    std::vector<char> seen(n, 0);
    seen[e.u] = 1;
    std::deque<NodeId> q{e.u};
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (const auto& [v, w] : g.neighbors(u)) {
        if (seen[v] || !tree.count(std::minmax(u, v))) continue;
        seen[v] = 1;
        prev[v] = u;
        q.push_back(v);
      }
    }
    BruteCycle c;
    c.weight_sum = e.w;
    c.nodes.insert(e.u);
    for (NodeId x = e.v; x != e.u; x = prev[x]) {
      c.nodes.insert(x);
      c.weight_sum += *g.edge_weight(x, prev[x]);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

inline std::vector<double> brute_wcycle(const WeightedGraph& g) {
  const auto cycles = brute_cycle_basis(g);
  std::vector<double> scores(g.node_count(), 0.0);
  if (cycles.empty()) return scores;
  for (const auto& c : cycles)
    for (NodeId v : c.nodes) scores[v] += c.weight_sum;
  for (double& s : scores) s /= double(cycles.size());
  return scores;
}

// --- Weighted betweenness: exhaustive simple-path enumeration -----------

namespace detail {

inline void all_paths(const WeightedGraph& g, NodeId at, NodeId target,
                      std::vector<char>& used, std::vector<NodeId>& path,
                      double length,
                      std::vector<std::pair<double, std::vector<NodeId>>>& out) {
  if (at == target) {
    out.emplace_back(length, path);
    return;
  }
  for (const auto& [v, w] : g.neighbors(at)) {
    if (used[v]) continue;
    used[v] = 1;
    path.push_back(v);
    all_paths(g, v, target, used, path, length + 1.0 / w, out);
    path.pop_back();
    used[v] = 0;
  }
}

}  // namespace detail

inline std::vector<double> brute_betweenness(const WeightedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<double> bc(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      std::vector<std::pair<double, std::vector<NodeId>>> paths;
      std::vector<char> used(n, 0);
      std::vector<NodeId> path{s};
      used[s] = 1;
      detail::all_paths(g, s, t, used, path, 0.0, paths);
      if (paths.empty()) continue;
      double best = paths[0].first;
      for (const auto& [len, p] : paths) best = std::min(best, len);
      std::vector<int> through(n, 0);
      int count = 0;
      for (const auto& [len, p] : paths) {
        if (!wcycle::path_lengths_equal(len, best)) continue;
        ++count;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
      }
      for (NodeId v = 0; v < n; ++v)
        if (through[v]) bc[v] += double(through[v]) / count;
    }
  }
  return bc;
}

// --- Weighted h-index: threshold-grid maximization ----------------------

inline double brute_wh(const WeightedGraph& g, NodeId v) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return 0.0;
  std::vector<double> candidates;
  std::vector<std::pair<double, double>> ws;  // (edge weight, neighbor strength)
  for (const auto& [j, w] : nbrs) {
    double s = g.strength(j);
    ws.emplace_back(w, s);
    candidates.push_back(s);
  }
  // The step function f(y) = total weight to neighbors of strength >= y only
  // changes value at neighbor strengths, so sup{y : f(y) >= y} is attained at
  // a strength or at one of f's own values; checking both sets is exact.
  const auto f_at = [&](double y) {
    double qualifying = 0;
    for (const auto& [w, s] : ws)
      if (s >= y) qualifying += w;
    return qualifying;
  };
  const std::size_t n_strengths = candidates.size();
  for (std::size_t i = 0; i < n_strengths; ++i)
    candidates.push_back(f_at(candidates[i]));
  double best = 0;
  for (double y : candidates) {
    double qualifying = 0;
    for (const auto& [w, s] : ws)
      if (s >= y) qualifying += w;
    if (qualifying >= y) best = std::max(best, y);
  }
  return best;
}

// --- Weighted coreness: naive re-peeling with residual graph rebuild ----

inline std::vector<double> brute_coreness(const WeightedGraph& g,
                                          double alpha = 1, double beta = 1) {
  const NodeId n = g.node_count();
  std::set<NodeId> alive;
  for (NodeId v = 0; v < n; ++v) alive.insert(v);
  std::vector<double> coreness(n, 0.0);
  double shell = 0;
  while (!alive.empty()) {
    NodeId pick = -1;
    double pick_val = 0;
    for (NodeId v : alive) {
      double k = 0, s = 0;
      for (const auto& [u, w] : g.neighbors(v)) {
        if (!alive.count(u)) continue;
        k += 1;
        s += w;
      }
      const double val =
          k > 0 ? std::pow(std::pow(k, alpha) * std::pow(s, beta),
                           1.0 / (alpha + beta))
                : 0.0;
      if (pick < 0 || val < pick_val) {
        pick = v;
        pick_val = val;
      }
    }
    shell = std::max(shell, pick_val);
    coreness[pick] = shell;
    alive.erase(pick);
  }
  return coreness;
}

// --- Kendall tau: O(N^2) pair counting ----------------------------------

inline double brute_kendall(const std::vector<double>& x,
                            const std::vector<double>& y) {
  const std::size_t n = x.size();
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx == 0 || dy == 0) continue;  // ties count as neither
      if ((dx > 0) == (dy > 0))
        ++concordant;
      else
        ++discordant;
    }
  return 2.0 * double(concordant - discordant) / (double(n) * (double(n) - 1));
}

// --- WSIR with mu = 1: exact expectation by directed-edge percolation ---

// With mu = 1 every node is infectious exactly one step and attempts each
// susceptible neighbor once, so the outbreak equals reachability over
// independently open directed edges.
inline double percolation_expected_r(const WeightedGraph& g,
                                     const std::vector<NodeId>& seeds,
                                     double p) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (const auto& e : g.edges()) {
    arcs.emplace_back(e.u, e.v);
    arcs.emplace_back(e.v, e.u);
  }
  const std::size_t m = arcs.size();
  double expectation = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    double prob = 1;
    for (std::size_t i = 0; i < m; ++i)
      prob *= (mask >> i & 1) ? p : (1 - p);
    std::vector<char> infected(g.node_count(), 0);
    std::deque<NodeId> q;
    for (NodeId s : seeds) {
      infected[s] = 1;
      q.push_back(s);
    }
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask >> i & 1) || arcs[i].first != u) continue;
        NodeId v = arcs[i].second;
        if (!infected[v]) {
          infected[v] = 1;
          q.push_back(v);
        }
      }
    }
    int r = 0;
    for (char c : infected) r += c;
    expectation += prob * r;
  }
  return expectation;
}

inline int bfs_reachable_size(const WeightedGraph& g,
                              const std::vector<NodeId>& seeds) {
  std::vector<char> seen(g.node_count(), 0);
  std::deque<NodeId> q;
  for (NodeId s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop_front();
    for (const auto& [v, w] : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        q.push_back(v);
      }
  }
  int r = 0;
  for (char c : seen) r += c;
  return r;
}

}  // namespace oracles

#endif
