#include "wcycle/wsir.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "wcycle/errors.hpp"

namespace wcycle {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

double epidemic_threshold(const GraphStats& st) {
  const double denom = st.mean_weight * (st.mean_sq_degree - st.mean_degree);
  if (!(denom > 0))
    throw ComputeError(
        "epidemic_threshold: undefined, <w>(<k^2>-<k>) = " +
        format_double(denom));
  return st.mean_degree / denom;
}

double epidemic_threshold(const WeightedGraph& g) {
  return epidemic_threshold(graph_stats(g));
}

namespace {

using detail::mix_stream;
using detail::u01;

constexpr std::uint64_t kPeriodTag = 0x706572696f64ULL;
constexpr std::uint64_t kContactTag = 0x636f6e74616374ULL;

double contact_probability(double beta, double w, InfectionModel model) {
  switch (model) {
    case InfectionModel::kLinearClamped:
      return std::min(1.0, beta * w);
    case InfectionModel::kComplement: {
      const double b = std::min(beta, 1.0);
      if (b <= 0) return 0.0;
      if (b >= 1) return 1.0;
      return 1.0 - std::pow(1.0 - b, w);
    }
  }
  return 0.0;
}

// Steps a node stays infectious: geometric(mu) on {1, 2, ...}.
int infectious_period(double mu, std::uint64_t bits, int cap) {
  if (mu >= 1.0) return 1;
  double u = u01(bits);
  if (u <= 0.0) u = 0x1.0p-53;
  const int period = 1 + int(std::floor(std::log(u) / std::log1p(-mu)));
  return std::min(std::max(period, 1), cap);
}

}  // namespace

RunOutcome wsir_run(const WeightedGraph& g, const SeedSet& seeds,
                    const WsirParams& params, std::uint64_t run_index) {
  const NodeId n = g.node_count();
  if (seeds.members.empty()) throw ConfigError("wsir_run: empty seed set");
  if (!(params.mu > 0.0) || params.mu > 1.0)
    throw ConfigError("wsir_run: mu must be in (0, 1]");
  if (params.beta < 0) throw ConfigError("wsir_run: beta must be >= 0");
  const int max_steps = params.max_steps > 0 ? params.max_steps : 10 * n;
  const std::uint64_t stream = mix_stream(params.master_seed, run_index);

  enum State : char { kSusceptible, kInfected, kRecovered };
  std::vector<State> state(n, kSusceptible);
  std::vector<int> steps_left(n, 0);
  std::vector<NodeId> infected;
  for (NodeId v : seeds.members) {
    if (v < 0 || v >= n)
      throw ConfigError("wsir_run: seed id out of range: " + std::to_string(v));
    if (state[v] == kInfected) continue;
    state[v] = kInfected;
    steps_left[v] =
        infectious_period(params.mu, mix_stream(stream, kPeriodTag, v),
                          max_steps);
    infected.push_back(v);
  }
  std::sort(infected.begin(), infected.end());

  // attempt counters per directed contact (infector, target)
  std::vector<std::vector<std::uint32_t>> attempts(n);
  for (NodeId v = 0; v < n; ++v)
    attempts[v].assign(g.neighbors(v).size(), 0);

  int recovered = 0;
  int step = 0;
  while (!infected.empty() && step < max_steps) {
    ++step;
    std::vector<NodeId> fresh;
    for (NodeId i : infected) {
      const auto& nbrs = g.neighbors(i);
      for (std::size_t a = 0; a < nbrs.size(); ++a) {
        const auto& [j, w] = nbrs[a];
        if (state[j] != kSusceptible) continue;
        const double p = contact_probability(params.beta, w, params.model);
        const std::uint32_t attempt = attempts[i][a]++;
        const double u = u01(mix_stream(stream, kContactTag,
                                        std::uint64_t(i) << 32 | std::uint64_t(std::uint32_t(j)),
                                        attempt));
        if (u < p) {
          state[j] = kInfected;  // transmits from the next step on
          steps_left[j] = infectious_period(
              params.mu, mix_stream(stream, kPeriodTag, j), max_steps);
          fresh.push_back(j);
        }
      }
    }
    std::vector<NodeId> still;
    for (NodeId i : infected) {
      if (--steps_left[i] == 0) {
        state[i] = kRecovered;
        ++recovered;
      } else {
        still.push_back(i);
      }
    }
    still.insert(still.end(), fresh.begin(), fresh.end());
    std::sort(still.begin(), still.end());
    infected.swap(still);
  }

  RunOutcome out;
  out.absorbed = infected.empty();
  out.final_size = recovered + static_cast<int>(infected.size());
  return out;
}

OutbreakResult wsir_average(const WeightedGraph& g, const SeedSet& seeds,
                            const WsirParams& params, int runs, int threads) {
  if (runs < 1) throw ConfigError("wsir_average: runs must be >= 1");
  OutbreakResult res;
  res.runs = runs;
  res.sizes.assign(runs, 0);
  std::vector<char> absorbed(runs, 1);
  auto work = [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      RunOutcome o = wsir_run(g, seeds, params, std::uint64_t(r));
      res.sizes[r] = o.final_size;
      absorbed[r] = o.absorbed ? 1 : 0;
    }
  };
  if (threads <= 1) {
    work(0, runs);
  } else {
    threads = std::min(threads, runs);
    std::vector<std::thread> pool;
    const int chunk = (runs + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(work, t * chunk, std::min(runs, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  double sum = 0, sum_sq = 0;
  for (int r = 0; r < runs; ++r) {
    sum += res.sizes[r];
    sum_sq += double(res.sizes[r]) * res.sizes[r];
    if (!absorbed[r]) ++res.unabsorbed;
  }
  res.mean_r = sum / runs;
  const double var = std::max(0.0, sum_sq / runs - res.mean_r * res.mean_r);
  res.std_r = std::sqrt(var);
  return res;
}

}  // namespace wcycle
