#include "shiner/engine.hpp"

#include <cmath>
#include <numeric>

#include "parallel.hpp"

namespace shiner {

SwarmState init_swarm(const SwarmParams& params, std::uint64_t master_seed, const Box& region) {
  params.validate();
  if (!(region.min_x < region.max_x) || !(region.min_y < region.max_y)) {
    throw ParamError("placement region must have positive width and height");
  }
  SwarmState state;
  state.positions.reserve(params.n_nodes);
  state.streams.reserve(params.n_nodes);

  NormalStream init(master_seed, NormalStream::kInitStreamId);
  const double width = region.max_x - region.min_x;
  const double height = region.max_y - region.min_y;
  for (std::size_t i = 0; i < params.n_nodes; ++i) {
    const double x = region.min_x + width * init.uniform();
    const double y = region.min_y + height * init.uniform();
    state.positions.emplace_back(x, y);
    state.streams.emplace_back(master_seed, static_cast<std::uint64_t>(i));
  }
  return state;
}

double default_sigma_const(const SwarmParams& params, std::span<const Position> initial) {
  double total = 0.0;
  for (const auto& p : initial) total += std::abs(p - params.rho);
  const double mean = initial.empty() ? 0.0 : total / static_cast<double>(initial.size());
  return params.c1 * (params.c2 + mean);
}

SwarmParams resolve_sigma_const(SwarmParams params, std::span<const Position> initial) {
  if (!params.sigma_const) params.sigma_const = default_sigma_const(params, initial);
  return params;
}

SwarmState advance_swarm(const SwarmState& state, const SwarmParams& params, unsigned threads) {
  const NeighborGraph graph = build_neighborhood(state.positions, params.r);
  SwarmState next;
  next.t = state.t + 1;
  next.positions.resize(state.positions.size());
  next.streams = state.streams;
  detail::parallel_for(state.positions.size(), threads, [&](std::size_t i) {
    const StepDraw draw = draw_step(i, state.positions, graph, params, next.streams[i]);
    next.positions[i] = state.positions[i] + step_displacement(draw.sigma, draw.v, draw.u_raw);
  });
  return next;
}

std::size_t count_components(const NeighborGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : graph.adjacency[i]) {
      const std::size_t a = find(i), b = find(j);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
  }
  return components;
}

Metrics compute_metrics(const SwarmState& state, const SwarmParams& params, double eps) {
  Metrics m;
  m.t = state.t;
  const auto& p = state.positions;
  const std::size_t n = p.size();
  if (n == 0) return m;

  double dist_sum = 0.0;
  std::size_t within = 0;
  for (const auto& q : p) {
    const double d = std::abs(q - params.rho);
    dist_sum += d;
    if (d <= eps) ++within;
  }
  m.mean_dist_to_rho = dist_sum / static_cast<double>(n);
  m.frac_within_eps = static_cast<double>(within) / static_cast<double>(n);

  if (n > 1) {
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pair_sum += std::abs(p[i] - p[j]);
    }
    m.mean_pairwise_dist = pair_sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
  }
  m.cluster_count = count_components(build_neighborhood(p, params.r));
  return m;
}

std::vector<Snapshot> run(const SwarmParams& params, const RunOptions& options) {
  if (options.snapshot_stride < 1) throw ParamError("snapshot stride must be at least 1");
  SwarmState state = init_swarm(params, options.master_seed, options.region);
  const SwarmParams resolved = resolve_sigma_const(params, state.positions);

  std::vector<Snapshot> snapshots;
  snapshots.push_back({state, compute_metrics(state, resolved, options.eps)});
  for (std::size_t step = 1; step <= options.n_steps; ++step) {
    state = advance_swarm(state, resolved, options.threads);
    if (step % options.snapshot_stride == 0 || step == options.n_steps) {
      snapshots.push_back({state, compute_metrics(state, resolved, options.eps)});
    }
  }
  return snapshots;
}

}  // namespace shiner
