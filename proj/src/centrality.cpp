#include "wcycle/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <thread>

#include "wcycle/errors.hpp"

namespace wcycle {

ScoreVector ScoreVector::from_scores(std::string name,
                                     std::vector<double> scores) {
  ScoreVector sv;
  sv.name = std::move(name);
  sv.scores = std::move(scores);
  sv.ranking.resize(sv.scores.size());
  std::iota(sv.ranking.begin(), sv.ranking.end(), 0);
  std::stable_sort(sv.ranking.begin(), sv.ranking.end(),
                   [&](NodeId a, NodeId b) {
                     if (sv.scores[a] != sv.scores[b])
                       return sv.scores[a] > sv.scores[b];
                     return a < b;
                   });
  return sv;
}

ScoreVector wcycle_centrality(const WeightedGraph& g, const CycleBasis& basis) {
  const NodeId n = g.node_count();
  std::vector<double> scores(n, 0.0);
  if (basis.size() > 0) {
    const double inv_b = 1.0 / static_cast<double>(basis.size());
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0;
      for (int ci : basis.cycles_containing(v))
        sum += basis.cycles()[ci].weight_sum;
      scores[v] = sum * inv_b;
    }
  }
  return ScoreVector::from_scores("WCycle", std::move(scores));
}

ScoreVector weighted_degree(const WeightedGraph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = g.strength(v);
  return ScoreVector::from_scores("WD", std::move(scores));
}

double weighted_h_index_node(const WeightedGraph& g, NodeId v) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return 0.0;
  std::vector<std::pair<double, NodeId>> by_strength;  // (-s, id) ascending
  by_strength.reserve(nbrs.size());
  for (const auto& [j, w] : nbrs) by_strength.emplace_back(-g.strength(j), j);
  std::sort(by_strength.begin(), by_strength.end());
  double cumulative = 0, best = 0;
  for (const auto& [neg_s, j] : by_strength) {
    cumulative += *g.edge_weight(v, j);
    best = std::max(best, std::min(cumulative, -neg_s));
  }
  return best;
}

ScoreVector weighted_h_index(const WeightedGraph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    scores[v] = weighted_h_index_node(g, v);
  return ScoreVector::from_scores("WH", std::move(scores));
}

namespace {

double core_value(double k, double s, const CorenessParams& p) {
  if (k <= 0) return 0.0;
  return std::pow(std::pow(k, p.alpha) * std::pow(s, p.beta),
                  1.0 / (p.alpha + p.beta));
}

}  // namespace

ScoreVector weighted_coreness(const WeightedGraph& g,
                              const CorenessParams& params) {
  if (params.alpha <= 0 || params.beta <= 0)
    throw ConfigError("weighted_coreness: alpha and beta must be > 0");
  const NodeId n = g.node_count();
  std::vector<double> k(n), s(n), scores(n, 0.0);
  std::vector<char> alive(n, 1);
  for (NodeId v = 0; v < n; ++v) {
    k[v] = g.degree(v);
    s[v] = g.strength(v);
  }
  double shell = 0;
  for (NodeId removed = 0; removed < n; ++removed) {
    NodeId pick = -1;
    double pick_val = std::numeric_limits<double>::infinity();
    for (NodeId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const double val = core_value(k[v], s[v], params);
      if (val < pick_val) {
        pick_val = val;
        pick = v;
      }
    }
    shell = std::max(shell, pick_val);
    scores[pick] = shell;
    alive[pick] = 0;
    for (const auto& [u, w] : g.neighbors(pick)) {
      if (!alive[u]) continue;
      k[u] -= 1;
      s[u] -= w;
    }
  }
  return ScoreVector::from_scores("WC", std::move(scores));
}

namespace {

// One Brandes pass from `source`, adding dependencies into `acc`.
void betweenness_from_source(const WeightedGraph& g, NodeId source,
                             std::vector<double>& acc) {
  const NodeId n = g.node_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<double> sigma(n, 0.0), delta(n, 0.0);
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<char> settled(n, 0);
  std::vector<NodeId> order;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[source] = 0;
  sigma[source] = 1;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    order.push_back(u);
    for (const auto& [v, w] : g.neighbors(u)) {
      const double cand = dist[u] + 1.0 / w;
      if (cand < dist[v] && !path_lengths_equal(cand, dist[v])) {
        dist[v] = cand;
        sigma[v] = sigma[u];
        preds[v].assign(1, u);
        pq.emplace(cand, v);
      } else if (path_lengths_equal(cand, dist[v]) && !settled[v]) {
        sigma[v] += sigma[u];
        preds[v].push_back(u);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId w = *it;
    for (NodeId v : preds[w])
      delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    if (w != source) acc[w] += delta[w];
  }
}

}  // namespace

ScoreVector weighted_betweenness(const WeightedGraph& g, int threads) {
  const NodeId n = g.node_count();
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, std::max<NodeId>(n, 1));
  std::vector<std::vector<double>> partial(
      threads, std::vector<double>(n, 0.0));
  if (threads == 1) {
    for (NodeId s = 0; s < n; ++s)
      betweenness_from_source(g, s, partial[0]);
  } else {
    // Static block partition keeps the reduction order deterministic.
    std::vector<std::thread> pool;
    const NodeId chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const NodeId lo = t * chunk;
      const NodeId hi = std::min<NodeId>(n, lo + chunk);
      pool.emplace_back([&, t, lo, hi] {
        for (NodeId s = lo; s < hi; ++s)
          betweenness_from_source(g, s, partial[t]);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<double> scores(n, 0.0);
  for (int t = 0; t < threads; ++t)
    for (NodeId v = 0; v < n; ++v) scores[v] += partial[t][v];
  for (double& x : scores) x *= 0.5;  // unordered pairs
  return ScoreVector::from_scores("WBC", std::move(scores));
}

std::size_t seed_count(double fraction, std::size_t n) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw ConfigError("seed fraction must be in (0, 1]");
  auto k = static_cast<std::size_t>(std::ceil(fraction * double(n) - 1e-9));
  if (k < 1) k = 1;
  return std::min(k, n);
}

SeedSet top_k(const ScoreVector& sv, double fraction) {
  const std::size_t k = seed_count(fraction, sv.ranking.size());
  SeedSet set;
  set.fraction = fraction;
  set.members.assign(sv.ranking.begin(), sv.ranking.begin() + k);
  return set;
}

}  // namespace wcycle
