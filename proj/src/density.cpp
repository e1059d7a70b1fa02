#include "shiner/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"

namespace shiner::density {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684758586311649;
constexpr double kMaxInitialDeficit = 1e-3;

double trapezoid_weight(const GridSpec& grid, std::size_t k) {
  const double h = grid.step();
  return (k == 0 || k + 1 == grid.n_points) ? 0.5 * h : h;
}

// Trapezoid weights plus an end correction at the kernel's kink at x = 0.
// The integrand's one-sided slopes there are estimated from three nodes on
// each side, which removes the O(h^2) term a derivative jump leaves behind.
// The node at the kink keeps its plain weight.
std::vector<double> propagation_weights(const GridSpec& grid) {
  const std::size_t n = grid.n_points;
  const double h = grid.step();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = trapezoid_weight(grid, k);

  const double pos = -grid.z_min / h;
  const double nearest = std::round(pos);
  if (std::fabs(pos - nearest) > 1e-9 || nearest < 3.0 || nearest + 3.0 > double(n - 1)) return w;
  const auto kink = static_cast<std::size_t>(nearest);
  const double delta[3] = {-5.0 * h / 24.0, h / 3.0, -h / 8.0};
  for (std::size_t j = 1; j <= 3; ++j) {
    w[kink - j] += delta[j - 1];
    w[kink + j] += delta[j - 1];
  }
  return w;
}

}  // namespace

double KernelParams::sigma_at(double x) const { return c1 * (c2 + std::abs(x)); }

void KernelParams::validate() const {
  if (!std::isfinite(c1) || c1 <= 0.0) throw GridError("c1 must be a positive constant");
  if (!std::isfinite(c2) || c2 <= 0.0) throw GridError("c2 must be a positive constant");
}

void GridSpec::validate() const {
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(z_min < z_max)) {
    throw GridError("grid requires finite z_min < z_max");
  }
  if (n_points < 3) throw GridError("grid requires at least 3 points");
}

double kernel_pdf(double mu, double z, const KernelParams& params) {
  const double sigma = params.sigma_at(mu);
  const double u = (z - mu) / sigma;
  return kInvSqrt2Pi / sigma * std::exp(-0.5 * u * u);
}

GridPdf initial_pdf(double x0, const GridSpec& grid, const KernelParams& params) {
  grid.validate();
  params.validate();
  GridPdf f{grid, std::vector<double>(grid.n_points), 1};
  for (std::size_t k = 0; k < grid.n_points; ++k) f.values[k] = kernel_pdf(x0, grid.at(k), params);

  const double deficit = 1.0 - grid_stats(f).mass;
  if (deficit > kMaxInitialDeficit) {
    const double sigma = params.sigma_at(x0);
    std::ostringstream msg;
    msg << "grid [" << grid.z_min << ", " << grid.z_max << "] loses " << deficit
        << " of the initial mass; span at least [" << x0 - 8.0 * sigma << ", "
        << x0 + 8.0 * sigma << "]";
    throw GridError(msg.str());
  }
  return f;
}

GridPdf propagate(const GridPdf& f, const KernelParams& params, unsigned threads) {
  const GridSpec& grid = f.grid;
  const std::size_t n = grid.n_points;

  // Per source point: quadrature weight times density over sigma, and the
  // Gaussian exponent scale.
  const std::vector<double> weight = propagation_weights(grid);
  std::vector<double> source_x(n), amplitude(n), neg_half_inv_var(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.at(i);
    const double sigma = params.sigma_at(x);
    source_x[i] = x;
    amplitude[i] = weight[i] * f.values[i] * kInvSqrt2Pi / sigma;
    neg_half_inv_var[i] = -0.5 / (sigma * sigma);
  }

  GridPdf out{grid, std::vector<double>(n), f.t + 1};
  detail::parallel_for(n, threads, [&](std::size_t k) {
    const double z = grid.at(k);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (amplitude[i] == 0.0) continue;
      const double d = z - source_x[i];
      acc += amplitude[i] * std::exp(d * d * neg_half_inv_var[i]);
    }
    out.values[k] = acc;
  });
  return out;
}

std::vector<GridPdf> pdf_series(double x0, int t_max, const GridSpec& grid,
                                const KernelParams& params, unsigned threads) {
  if (t_max < 1) throw GridError("t must be at least 1");
  std::vector<GridPdf> series;
  series.reserve(static_cast<std::size_t>(t_max));
  series.push_back(initial_pdf(x0, grid, params));
  while (series.back().t < t_max) series.push_back(propagate(series.back(), params, threads));
  return series;
}

GridPdf pdf_at_time(double x0, int t, const GridSpec& grid, const KernelParams& params,
                    unsigned threads) {
  if (t < 1) throw GridError("t must be at least 1");
  GridPdf f = initial_pdf(x0, grid, params);
  while (f.t < t) f = propagate(f, params, threads);
  return f;
}

std::vector<double> mc_sample(double x0, int t, std::size_t n_paths, const KernelParams& params,
                              NormalStream& stream) {
  std::vector<double> finals(n_paths);
  for (auto& x : finals) {
    x = x0;
    for (int step = 0; step < t; ++step) x += params.sigma_at(x) * stream.normal();
  }
  return finals;
}

double integrate_interval(const GridPdf& f, double a, double b) {
  const GridSpec& grid = f.grid;
  a = std::max(a, grid.z_min);
  b = std::min(b, grid.z_max);
  if (!(a < b)) return 0.0;
  const double h = grid.step();
  const auto last = grid.n_points - 1;
  const auto first_seg = std::min<std::size_t>(last - 1, static_cast<std::size_t>((a - grid.z_min) / h));

  double total = 0.0;
  for (std::size_t k = first_seg; k < last; ++k) {
    const double left = grid.at(k);
    const double right = grid.at(k + 1);
    if (left >= b) break;
    const double lo = std::max(left, a);
    const double hi = std::min(right, b);
    if (!(lo < hi)) continue;
    const double slope = (f.values[k + 1] - f.values[k]) / (right - left);
    const double f_lo = f.values[k] + slope * (lo - left);
    const double f_hi = f.values[k] + slope * (hi - left);
    total += 0.5 * (f_lo + f_hi) * (hi - lo);
  }
  return total;
}

GridStats grid_stats(const GridPdf& f) {
  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k < f.grid.n_points; ++k) {
    const double weighted = trapezoid_weight(f.grid, k) * f.values[k];
    mass += weighted;
    moment += weighted * f.grid.at(k);
  }
  if (!(mass > 0.0)) throw GridError("density has zero mass on the grid");
  return {mass, moment / mass, 1.0 - mass};
}

double mass_near(const GridPdf& f, double eps) { return integrate_interval(f, -eps, eps); }

}  // namespace shiner::density
