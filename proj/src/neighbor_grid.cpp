#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "shiner/swarm_core.hpp"

namespace shiner {

namespace {

// Cells are slightly wider than r so that rounding in the cell-index
// division can never separate a pair at distance exactly r by two cells.
constexpr double kCellInflation = 1.0 + 1e-7;
// Beyond this many cells per axis the index arithmetic loses the margin
// above; fall back to the pairwise scan.
constexpr double kMaxCellsPerAxis = 1e7;

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint32_t>(cy);
}

}  // namespace

NeighborGraph build_neighborhood(std::span<const Position> positions, double r) {
  const std::size_t n = positions.size();
  if (n < 2 || !(r > 0.0)) return build_neighborhood_brute(positions, r);

  double min_x = positions[0].real(), max_x = min_x;
  double min_y = positions[0].imag(), max_y = min_y;
  for (const auto& p : positions) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  const double cell = r * kCellInflation;
  if ((max_x - min_x) / cell > kMaxCellsPerAxis || (max_y - min_y) / cell > kMaxCellsPerAxis) {
    return build_neighborhood_brute(positions, r);
  }

  std::vector<std::int64_t> cx(n), cy(n);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells;
  cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cx[i] = static_cast<std::int64_t>(std::floor((positions[i].real() - min_x) / cell));
    cy[i] = static_cast<std::int64_t>(std::floor((positions[i].imag() - min_y) / cell));
    cells[cell_key(cx[i], cy[i])].push_back(i);
  }

  NeighborGraph graph;
  graph.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& list = graph.adjacency[i];
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells.find(cell_key(cx[i] + dx, cy[i] + dy));
        if (it == cells.end()) continue;
        for (std::size_t j : it->second) {
          if (j != i && within_radius(positions[i], positions[j], r)) list.push_back(j);
        }
      }
    }
    std::sort(list.begin(), list.end());
  }
  return graph;
}

}  // namespace shiner
