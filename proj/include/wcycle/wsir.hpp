#ifndef WCYCLE_WSIR_HPP
#define WCYCLE_WSIR_HPP

#include <cstdint>
#include <vector>

#include "wcycle/centrality.hpp"
#include "wcycle/graph.hpp"

namespace wcycle {

enum class InfectionModel {
  kLinearClamped,  // p = min(1, beta * w)
  kComplement,     // p = 1 - (1 - min(beta, 1))^w
};

struct WsirParams {
  double beta = 0;
  double mu = 0.5;
  int max_steps = 0;  // <= 0 means the default 10 * N
  std::uint64_t master_seed = 0;
  InfectionModel model = InfectionModel::kLinearClamped;
};

struct RunOutcome {
  int final_size = 0;  // recovered plus residual infected
  bool absorbed = true;
};

struct OutbreakResult {
  std::vector<int> sizes;
  double mean_r = 0;
  double std_r = 0;  // population standard deviation over runs
  int runs = 0;
  int unabsorbed = 0;
};

// beta_c = <k> / (<w> (<k^2> - <k>)); throws ComputeError when the
// denominator degenerates.
double epidemic_threshold(const GraphStats& st);
double epidemic_threshold(const WeightedGraph& g);

// One synchronous discrete-time run. Newly infected nodes start
// transmitting the following step; a node infected at the start of a step
// recovers with probability mu after its attempts. Infectious periods are
// drawn as geometric(mu) per node and per-contact draws are keyed by
// (run stream, edge, attempt), so a run is a deterministic function of
// (master seed, run index) and seed sets couple monotonically.
RunOutcome wsir_run(const WeightedGraph& g, const SeedSet& seeds,
                    const WsirParams& params, std::uint64_t run_index);

OutbreakResult wsir_average(const WeightedGraph& g, const SeedSet& seeds,
                            const WsirParams& params, int runs,
                            int threads = 1);

namespace detail {

// splitmix64; the per-run/per-event stream derivation below chains it.
std::uint64_t mix64(std::uint64_t x);

inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b = 0, std::uint64_t c = 0) {
  return mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ c);
}

// Uniform in [0, 1) from 53 random bits.
inline double u01(std::uint64_t bits) {
  return double(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

}  // namespace wcycle

#endif
