#include "shiner/swarm_core.hpp"

#include <cmath>
#include <numbers>

namespace shiner {

std::size_t NeighborGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency) twice += list.size();
  return twice / 2;
}

NeighborGraph build_neighborhood_brute(std::span<const Position> positions, double r) {
  NeighborGraph graph;
  graph.adjacency.resize(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (within_radius(positions[i], positions[j], r)) {
        graph.adjacency[i].push_back(j);
        graph.adjacency[j].push_back(i);
      }
    }
  }
  return graph;
}

double env_speed(Position p, const SwarmParams& params) {
  if (!params.env_enabled) {
    if (!params.sigma_const) {
      throw ParamError("sigma_const must be resolved when the environmental factor is off");
    }
    return *params.sigma_const;
  }
  return params.c1 * (params.c2 + std::abs(p - params.rho));
}

std::complex<double> hammer(std::complex<double> z, double s) {
  const double magnitude = std::abs(z);
  if (magnitude == 0.0) return {0.0, 0.0};
  return z * ((magnitude - s) / magnitude);
}

double angle_of(std::complex<double> z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
  const double angle = std::arg(z);
  // atan2 yields -pi for a negative real axis carrying a -0 imaginary part.
  return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

double social_direction(std::size_t i, std::span<const Position> positions,
                        const NeighborGraph& graph, const SwarmParams& params,
                        std::complex<double> z) {
  const auto& neighbors = graph.adjacency[i];
  if (!params.social_enabled || neighbors.empty()) return angle_of(z);
  std::complex<double> pull{0.0, 0.0};
  for (std::size_t j : neighbors) pull += hammer(positions[j] - positions[i], params.s);
  const double scale = params.w / static_cast<double>(neighbors.size());
  return angle_of(scale * pull + z);
}

std::complex<double> step_displacement(double sigma, double v, double u_raw) {
  return std::polar(sigma * u_raw, v);
}

StepDraw draw_step(std::size_t i, std::span<const Position> positions,
                   const NeighborGraph& graph, const SwarmParams& params,
                   NormalStream& stream) {
  StepDraw draw;
  draw.u_raw = sample_u(stream);
  draw.z = sample_z(stream);
  draw.sigma = env_speed(positions[i], params);
  draw.v = social_direction(i, positions, graph, params, draw.z);
  return draw;
}

}  // namespace shiner
