#include "wcycle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "wcycle/errors.hpp"

namespace wcycle {

namespace {

// Fenwick tree over compressed ranks.
class BitCounter {
 public:
  explicit BitCounter(int n) : tree_(n + 1, 0) {}
  void add(int i) {
    for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
  }
  // count of inserted values with rank < i
  long long below(int i) const {
    long long s = 0;
    for (; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }

 private:
  std::vector<long long> tree_;
};

long long tie_pairs(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  long long total = 0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const long long t = static_cast<long long>(j - i);
    total += t * (t - 1) / 2;
    i = j;
  }
  return total;
}

}  // namespace

double kendall_tau(const ScoreVector& x, const ScoreVector& y,
                   TauVariant variant) {
  const std::size_t n = x.scores.size();
  if (n != y.scores.size())
    throw ConfigError("kendall_tau: mismatched node universes");
  if (n < 2) throw ConfigError("kendall_tau: need at least 2 nodes");

  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x.scores[i], y.scores[i]};
  std::sort(pairs.begin(), pairs.end());

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = pairs[i].second;
  std::vector<double> sorted_y = ys;
  std::sort(sorted_y.begin(), sorted_y.end());
  sorted_y.erase(std::unique(sorted_y.begin(), sorted_y.end()),
                 sorted_y.end());
  auto y_rank = [&](double v) {
    return static_cast<int>(std::lower_bound(sorted_y.begin(), sorted_y.end(),
                                             v) -
                            sorted_y.begin());
  };

  BitCounter bit(static_cast<int>(sorted_y.size()));
  long long s = 0;  // Nc - Nd
  long long inserted = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && pairs[j].first == pairs[i].first) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const int r = y_rank(pairs[k].second);
      const long long less = bit.below(r);
      const long long less_eq = bit.below(r + 1);
      s += less - (inserted - less_eq);
    }
    for (std::size_t k = i; k < j; ++k) {
      bit.add(y_rank(pairs[k].second));
      ++inserted;
    }
    i = j;
  }

  const double n0 = double(n) * (double(n) - 1) / 2.0;
  if (variant == TauVariant::kPaper) return double(s) / n0;
  const double n1 = double(tie_pairs(x.scores));
  const double n2 = double(tie_pairs(y.scores));
  const double denom = std::sqrt((n0 - n1) * (n0 - n2));
  if (!(denom > 0))
    throw ComputeError("kendall_tau: tau-b undefined, all values tied");
  return double(s) / denom;
}

CorrelationMatrix correlation_matrix(const std::vector<ScoreVector>& svs,
                                     TauVariant variant) {
  CorrelationMatrix m;
  const std::size_t k = svs.size();
  m.values.assign(k, std::vector<double>(k, 1.0));
  for (const auto& sv : svs) m.names.push_back(sv.name);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      m.values[i][j] = m.values[j][i] = kendall_tau(svs[i], svs[j], variant);
  return m;
}

CorrelationMatrix average_correlation_matrix(
    const std::vector<CorrelationMatrix>& matrices) {
  if (matrices.empty())
    throw ConfigError("average_correlation_matrix: no matrices");
  CorrelationMatrix avg = matrices.front();
  for (std::size_t m = 1; m < matrices.size(); ++m) {
    if (matrices[m].names != avg.names)
      throw ConfigError(
          "average_correlation_matrix: inconsistent indicator lists");
    for (std::size_t i = 0; i < avg.values.size(); ++i)
      for (std::size_t j = 0; j < avg.values.size(); ++j)
        avg.values[i][j] += matrices[m].values[i][j];
  }
  const double inv = 1.0 / double(matrices.size());
  for (auto& row : avg.values)
    for (double& v : row) v *= inv;
  return avg;
}

double jaccard_sets(const std::vector<NodeId>& a,
                    const std::vector<NodeId>& b) {
  if (a.empty() && b.empty())
    throw ConfigError("jaccard_sets: both sets empty");
  std::vector<NodeId> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<NodeId> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(inter));
  const std::size_t uni = sa.size() + sb.size() - inter.size();
  return double(inter.size()) / double(uni);
}

double avg_jaccard_against_others(std::size_t target,
                                  const std::vector<ScoreVector>& indicators,
                                  double fraction) {
  if (indicators.size() < 2)
    throw ConfigError("avg_jaccard_against_others: need >= 2 indicators");
  if (target >= indicators.size())
    throw ConfigError("avg_jaccard_against_others: bad target index");
  const auto target_set = top_k(indicators[target], fraction).members;
  double sum = 0;
  for (std::size_t i = 0; i < indicators.size(); ++i) {
    if (i == target) continue;
    sum += jaccard_sets(target_set, top_k(indicators[i], fraction).members);
  }
  return sum / double(indicators.size() - 1);
}

std::string score_key(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", x);
  return buf;
}

double individuation(const ScoreVector& sv, double top_fraction) {
  const std::size_t m = seed_count(top_fraction, sv.ranking.size());
  std::unordered_map<std::string, int> counts;
  for (std::size_t i = 0; i < m; ++i)
    ++counts[score_key(sv.scores[sv.ranking[i]])];
  std::size_t unique = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (counts[score_key(sv.scores[sv.ranking[i]])] == 1) ++unique;
  return double(unique) / double(m);
}

std::map<int, int> shared_rank_frequency(const ScoreVector& sv,
                                         double top_fraction) {
  const std::size_t m = seed_count(top_fraction, sv.ranking.size());
  std::map<int, int> hist;
  int rank = 0;
  std::string prev;
  for (std::size_t i = 0; i < m; ++i) {
    std::string key = score_key(sv.scores[sv.ranking[i]]);
    if (i == 0 || key != prev) ++rank;
    ++hist[rank];
    prev = std::move(key);
  }
  return hist;
}

std::optional<double> dispersion(const WeightedGraph& g, const SeedSet& seeds) {
  if (seeds.members.size() < 2)
    throw ConfigError("dispersion: need at least 2 seeds");
  double sum = 0;
  long long reachable_pairs = 0;
  for (NodeId s : seeds.members) {
    const auto dist = hop_distances(g, s);
    for (NodeId t : seeds.members) {
      if (t == s) continue;
      if (dist[t]) {
        sum += *dist[t];
        ++reachable_pairs;
      }
    }
  }
  if (reachable_pairs == 0) return std::nullopt;
  return sum / double(reachable_pairs);
}

double structural_similarity(const WeightedGraph& g, NodeId i, NodeId j) {
  if (i == j) throw ConfigError("structural_similarity: i == j");
  const auto& ni = g.neighbors(i);
  const auto& nj = g.neighbors(j);
  std::size_t inter = 0, a = 0, b = 0;
  while (a < ni.size() && b < nj.size()) {
    if (ni[a].first < nj[b].first) {
      ++a;
    } else if (nj[b].first < ni[a].first) {
      ++b;
    } else {
      ++inter;
      ++a;
      ++b;
    }
  }
  const std::size_t uni = ni.size() + nj.size() - inter;
  if (uni == 0) return 0.0;
  return double(inter) / double(uni);
}

double avg_structural_similarity(const WeightedGraph& g,
                                 const SeedSet& seeds) {
  const std::size_t c = seeds.members.size();
  if (c < 2) throw ConfigError("avg_structural_similarity: need >= 2 seeds");
  double sum = 0;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j)
      sum += 2.0 * structural_similarity(g, seeds.members[i], seeds.members[j]);
  return sum / (double(c) * (double(c) - 1));
}

double activation_cost(const WeightedGraph& g, const SeedSet& seeds,
                       CostBinning binning) {
  if (seeds.members.empty()) throw ConfigError("activation_cost: empty seeds");
  const NodeId n = g.node_count();
  std::vector<double> strengths(n);
  for (NodeId v = 0; v < n; ++v) strengths[v] = g.strength(v);

  auto probability = [&](NodeId seed) {
    if (binning == CostBinning::kExact) {
      int count = 0;
      for (NodeId v = 0; v < n; ++v)
        if (strengths[v] == strengths[seed]) ++count;
      return double(count) / double(n);
    }
    const auto [lo_it, hi_it] =
        std::minmax_element(strengths.begin(), strengths.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) return 1.0;
    const int bins = static_cast<int>(std::ceil(std::sqrt(double(n))));
    const double width = (hi - lo) / bins;
    auto bin_of = [&](double s) {
      return std::min(bins - 1, static_cast<int>((s - lo) / width));
    };
    const int target = bin_of(strengths[seed]);
    int count = 0;
    for (NodeId v = 0; v < n; ++v)
      if (bin_of(strengths[v]) == target) ++count;
    return double(count) / double(n);
  };

  double lambda = 0;
  for (NodeId seed : seeds.members)
    lambda += strengths[seed] / probability(seed);
  return lambda;
}

}  // namespace wcycle
