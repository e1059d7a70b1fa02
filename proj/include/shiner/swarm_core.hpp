#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "shiner/rng.hpp"
#include "shiner/types.hpp"

namespace shiner {

/// Undirected, loop-free proximity graph: nodes i and j are adjacent
/// exactly when |p_i - p_j| <= r. Each adjacency list is sorted ascending.
struct NeighborGraph {
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const { return adjacency.size(); }
  std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
  std::size_t edge_count() const;

  bool operator==(const NeighborGraph&) const = default;
};

/// Builds the sensing-radius graph using a uniform cell grid.
NeighborGraph build_neighborhood(std::span<const Position> positions, double r);

/// Reference O(N^2) construction; same edge predicate as the grid version.
NeighborGraph build_neighborhood_brute(std::span<const Position> positions, double r);

/// Distance predicate shared by every graph builder.
inline bool within_radius(Position a, Position b, double r) {
  return std::abs(a - b) <= r;
}

/// Per-step speed scale: c1 * (c2 + |p - rho|) with the environmental
/// factor on, the resolved constant speed otherwise.
double env_speed(Position p, const SwarmParams& params);

/// Shrinks |z| by s keeping the direction, or flips the direction when
/// |z| < s. A zero input maps to zero.
std::complex<double> hammer(std::complex<double> z, double s);

/// Angle of a complex number in (-pi, pi]; the angle of exact zero is 0.
double angle_of(std::complex<double> z);

/// Heading of node i: angle of (w / |N_i|) * sum_j hammer(p_j - p_i, s) + z.
/// Falls back to the angle of z for an empty neighborhood or when the
/// social factor is off.
double social_direction(std::size_t i, std::span<const Position> positions,
                        const NeighborGraph& graph, const SwarmParams& params,
                        std::complex<double> z);

/// (sigma * u_raw) * exp(j v).
std::complex<double> step_displacement(double sigma, double v, double u_raw);

/// Anything that hands out standard-normal draws one at a time.
template <typename T>
concept NormalSource = requires(T& source) {
  { source.normal() } -> std::convertible_to<double>;
};

/// Chi(2) variate: the norm of two consecutive standard normals.
template <NormalSource Source>
double sample_u(Source& source) {
  const double g1 = source.normal();
  const double g2 = source.normal();
  return std::hypot(g1, g2);
}

/// Z_r + j Z_i with independent standard-normal components.
template <NormalSource Source>
std::complex<double> sample_z(Source& source) {
  const double zr = source.normal();
  const double zi = source.normal();
  return {zr, zi};
}

/// The random quantities behind one node's move.
struct StepDraw {
  double u_raw = 0.0;
  std::complex<double> z;
  double v = 0.0;
  double sigma = 0.0;
};

/// Draws U then Z (four normals, in that order) and evaluates the move of
/// node i against the frozen positions.
StepDraw draw_step(std::size_t i, std::span<const Position> positions,
                   const NeighborGraph& graph, const SwarmParams& params,
                   NormalStream& stream);

}  // namespace shiner
