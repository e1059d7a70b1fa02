#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shiner/rng.hpp"
#include "shiner/swarm_core.hpp"
#include "shiner/types.hpp"

namespace shiner {

/// One simulation frame. `streams[i]` is node i's private generator.
struct SwarmState {
  std::size_t t = 0;
  std::vector<Position> positions;
  std::vector<NormalStream> streams;

  bool operator==(const SwarmState&) const = default;
};

struct Metrics {
  std::size_t t = 0;
  double mean_dist_to_rho = 0.0;
  double frac_within_eps = 0.0;
  double mean_pairwise_dist = 0.0;
  std::size_t cluster_count = 0;

  bool operator==(const Metrics&) const = default;
};

struct Snapshot {
  SwarmState state;
  Metrics metrics;
};

/// Places nodes uniformly in `region` from the init stream and keys node
/// i's stream by (master_seed, i).
SwarmState init_swarm(const SwarmParams& params, std::uint64_t master_seed, const Box& region);

/// Default constant speed for runs without the environmental factor: the
/// environmental speed at the mean initial distance to rho.
double default_sigma_const(const SwarmParams& params, std::span<const Position> initial);

/// Returns params with sigma_const filled in from `initial` if it is unset.
SwarmParams resolve_sigma_const(SwarmParams params, std::span<const Position> initial);

/// Synchronous step: every node reads the time-t positions, then all move.
/// The result does not depend on `threads`.
SwarmState advance_swarm(const SwarmState& state, const SwarmParams& params, unsigned threads = 1);

Metrics compute_metrics(const SwarmState& state, const SwarmParams& params, double eps);

/// Number of connected components of the proximity graph.
std::size_t count_components(const NeighborGraph& graph);

struct RunOptions {
  std::uint64_t master_seed = 1;
  Box region;
  std::size_t n_steps = 70;
  std::size_t snapshot_stride = 35;
  double eps = 0.15;
  unsigned threads = 1;
};

/// Snapshots at t = 0, every stride, and the final step.
std::vector<Snapshot> run(const SwarmParams& params, const RunOptions& options);

}  // namespace shiner
