#pragma once

#include <span>
#include <string>

#include "shiner/csv_io.hpp"
#include "shiner/types.hpp"

namespace shiner::svg {

inline constexpr double kViewport = 800.0;
inline constexpr double kArenaHalfWidth = 0.6;
inline constexpr double kNodeRadius = 4.0;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Linear map of [-0.6, 0.6]^2 onto the 800x800 viewport, y pointing up.
Point arena_to_viewport(Position p);

/// One `<circle class="node">` per position plus a `<rect class="rho">`
/// centred on the dark spot.
std::string render_swarm(std::span<const Position> positions, Position rho, std::size_t step);

/// A single polyline over every sample, with labelled axes.
std::string render_density(const csv::DensityCurve& curve);

}  // namespace shiner::svg
