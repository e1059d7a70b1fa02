#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shiner/rng.hpp"

namespace shiner::density {

/// Raised when a grid cannot hold the requested density.
class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-dimensional walk x' ~ N(x, (c1 (c2 + |x|))^2) with the dark spot at 0.
struct KernelParams {
  double c1 = 1.0;
  double c2 = 0.1;

  double sigma_at(double x) const;
  void validate() const;
};

/// Uniform grid of `n_points` nodes spanning [z_min, z_max] inclusive.
struct GridSpec {
  double z_min = -60.0;
  double z_max = 60.0;
  std::size_t n_points = 6001;

  double step() const { return (z_max - z_min) / static_cast<double>(n_points - 1); }
  double at(std::size_t k) const { return z_min + static_cast<double>(k) * step(); }
  void validate() const;
};

/// Density samples of x_t on a grid. Mass lost past the grid edges is
/// never restored; `grid_stats` reports it as a deficit.
struct GridPdf {
  GridSpec grid;
  std::vector<double> values;
  int t = 1;

  double z(std::size_t k) const { return grid.at(k); }
};

struct GridStats {
  double mass = 0.0;
  double mean = 0.0;
  double deficit = 0.0;
};

double kernel_pdf(double mu, double z, const KernelParams& params);

/// Samples the one-step density from x0. Throws GridError when more than
/// 1e-3 of the mass falls outside the grid.
GridPdf initial_pdf(double x0, const GridSpec& grid, const KernelParams& params);

/// One Chapman-Kolmogorov step by trapezoidal quadrature over the grid, with an
/// end correction at the kernel kink at x = 0 when it falls on a grid node.
/// Output points are independent; `threads` only changes wall time.
GridPdf propagate(const GridPdf& f, const KernelParams& params, unsigned threads = 1);

GridPdf pdf_at_time(double x0, int t, const GridSpec& grid, const KernelParams& params,
                    unsigned threads = 1);

/// Every curve from t = 1 through t = t_max.
std::vector<GridPdf> pdf_series(double x0, int t_max, const GridSpec& grid,
                                const KernelParams& params, unsigned threads = 1);

/// Final positions of `n_paths` independent t-step chains.
std::vector<double> mc_sample(double x0, int t, std::size_t n_paths, const KernelParams& params,
                              NormalStream& stream);

/// Integral of the piecewise-linear interpolant over [a, b] intersected
/// with the grid span. Over the whole span this equals the trapezoidal rule.
double integrate_interval(const GridPdf& f, double a, double b);

/// Trapezoidal mass and mean; throws GridError on zero mass.
GridStats grid_stats(const GridPdf& f);

/// Mass within |z| <= eps.
double mass_near(const GridPdf& f, double eps);

}  // namespace shiner::density
