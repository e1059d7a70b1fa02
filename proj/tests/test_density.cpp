#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "shiner/density.hpp"

using namespace shiner::density;

namespace {

const KernelParams kBenchmark{1.0, 0.1};
const GridSpec kDefaultGrid{-60.0, 60.0, 6001};
// Wide enough that the t = 3 tail beyond the edges is below 1e-5.
const GridSpec kWideGrid{-200.0, 200.0, 20001};

double sample_mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  const double m = sample_mean(xs);
  double q = 0;
  for (double x : xs) q += (x - m) * (x - m);
  return std::sqrt(q / static_cast<double>(xs.size() - 1));
}

}  // namespace

TEST(KernelPdf, PeakValues) {
  EXPECT_NEAR(kernel_pdf(0.0, 0.0, kBenchmark), 3.98942280401, 1e-10);
  EXPECT_NEAR(kernel_pdf(5.0, 5.0, kBenchmark), 0.0782239765, 1e-9);
}

TEST(KernelPdf, SymmetricAboutMeanAndPositive) {
  for (double mu : {-7.0, -0.3, 0.0, 2.0, 11.0}) {
    for (double d : {0.01, 0.5, 3.0, 20.0}) {
      EXPECT_DOUBLE_EQ(kernel_pdf(mu, mu + d, kBenchmark), kernel_pdf(mu, mu - d, kBenchmark));
      if (d < 30.0 * kBenchmark.sigma_at(mu)) EXPECT_GT(kernel_pdf(mu, mu + d, kBenchmark), 0.0);
    }
  }
}

TEST(KernelPdf, MatchesIndependentFormula) {
  for (double mu : {-3.0, 0.0, 0.2, 5.0}) {
    for (double z : {-4.0, 0.0, 1.0, 6.0}) {
      EXPECT_NEAR(kernel_pdf(mu, z, {0.7, 0.3}), oracle::gaussian_kernel(mu, z, 0.7, 0.3), 1e-15);
    }
  }
}

TEST(InitialPdf, FarStartDensity) {
  const auto f = initial_pdf(5.0, kDefaultGrid, kBenchmark);
  EXPECT_EQ(f.t, 1);
  const auto stats = grid_stats(f);
  EXPECT_NEAR(stats.mass, 1.0, 1e-6);
  EXPECT_NEAR(stats.mean, 5.0, 1e-6);
  const auto peak = std::max_element(f.values.begin(), f.values.end()) - f.values.begin();
  EXPECT_DOUBLE_EQ(f.z(static_cast<std::size_t>(peak)), 5.0);
  EXPECT_NEAR(f.values[static_cast<std::size_t>(peak)], 1.0 / (std::sqrt(2 * std::numbers::pi) * 5.1), 1e-12);
}

TEST(InitialPdf, NarrowGridIsRejected) {
  try {
    initial_pdf(5.0, {-10.0, 10.0, 1001}, kBenchmark);
    FAIL() << "expected GridError";
  } catch (const GridError& e) {
    EXPECT_NE(std::string(e.what()).find("span at least"), std::string::npos);
  }
}

TEST(InitialPdf, InvalidInputs) {
  EXPECT_THROW(initial_pdf(0.0, {1.0, -1.0, 11}, kBenchmark), GridError);
  EXPECT_THROW(initial_pdf(0.0, {-1.0, 1.0, 2}, kBenchmark), GridError);
  EXPECT_THROW(initial_pdf(0.0, kDefaultGrid, {-1.0, 0.1}), GridError);
  EXPECT_THROW(pdf_at_time(0.0, 0, kDefaultGrid, kBenchmark), GridError);
}

TEST(GridStats, UniformDensity) {
  GridPdf f{{-1.0, 1.0, 201}, std::vector<double>(201, 0.5), 1};
  const auto stats = grid_stats(f);
  EXPECT_NEAR(stats.mass, 1.0, 1e-14);
  EXPECT_NEAR(stats.mean, 0.0, 1e-14);
  EXPECT_NEAR(mass_near(f, 0.5), 0.5, 1e-14);
  // Interval ends between grid points.
  EXPECT_NEAR(mass_near(f, 0.123), 0.123, 1e-14);
  EXPECT_NEAR(integrate_interval(f, -5.0, 5.0), 1.0, 1e-14);
}

TEST(GridStats, ZeroMassIsAnError) {
  GridPdf f{{-1.0, 1.0, 11}, std::vector<double>(11, 0.0), 1};
  EXPECT_THROW(grid_stats(f), GridError);
}

TEST(IntegrateInterval, ExactForLinearDensity) {
  // f(z) = z on [0, 2]; integral over [0.3, 1.7] = (1.7^2 - 0.3^2) / 2.
  GridSpec g{0.0, 2.0, 9};
  GridPdf f{g, {}, 1};
  for (std::size_t k = 0; k < g.n_points; ++k) f.values.push_back(g.at(k));
  EXPECT_NEAR(integrate_interval(f, 0.3, 1.7), (1.7 * 1.7 - 0.3 * 0.3) / 2, 1e-14);
}

TEST(Propagate, PointMassReproducesKernel) {
  const GridSpec g{-2.0, 2.0, 4001};
  GridPdf spike{g, std::vector<double>(g.n_points, 0.0), 1};
  spike.values[2000] = 1.0 / g.step();
  const auto out = propagate(spike, kBenchmark);
  EXPECT_EQ(out.t, 2);
  const auto stats = grid_stats(out);
  EXPECT_NEAR(stats.mean, 0.0, g.step());
  double var = 0;
  for (std::size_t k = 0; k < g.n_points; ++k) var += g.step() * out.values[k] * out.z(k) * out.z(k);
  EXPECT_NEAR(std::sqrt(var / stats.mass), 0.1, 0.005);

  const double peak = kernel_pdf(0.0, 0.0, kBenchmark);
  for (std::size_t k = 0; k < g.n_points; ++k) {
    const double expected = kernel_pdf(0.0, out.z(k), kBenchmark);
    if (expected < 0.01 * peak) continue;
    EXPECT_NEAR(out.values[k], expected, 1e-3 * expected) << "z = " << out.z(k);
  }
}

TEST(Propagate, NeverGainsMass) {
  auto f = initial_pdf(5.0, kDefaultGrid, kBenchmark);
  for (int step = 0; step < 3; ++step) {
    const auto next = propagate(f, kBenchmark);
    EXPECT_LE(grid_stats(next).mass, grid_stats(f).mass + 1e-9);
    f = next;
  }
}

TEST(Propagate, ThreadCountDoesNotChangeBits) {
  const auto f = initial_pdf(5.0, {-60.0, 60.0, 1201}, kBenchmark);
  EXPECT_EQ(propagate(f, kBenchmark, 1).values, propagate(f, kBenchmark, 4).values);
}

TEST(Propagate, OneStepMatchesDirectIntegral) {
  const auto f2 = propagate(initial_pdf(5.0, kDefaultGrid, kBenchmark), kBenchmark);
  for (double z : {0.0, 2.5, 5.0, 7.5, 10.0}) {
    const double expected = oracle::direct_f2(5.0, z, 1.0, 0.1);
    const auto k = static_cast<std::size_t>(std::lround((z - kDefaultGrid.z_min) / kDefaultGrid.step()));
    EXPECT_NEAR(f2.values[k], expected, 2e-4 * expected) << "z = " << z;
  }
}

TEST(PdfAtTime, FirstStepIsInitialDensity) {
  const auto a = pdf_at_time(5.0, 1, kDefaultGrid, kBenchmark);
  const auto b = initial_pdf(5.0, kDefaultGrid, kBenchmark);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.t, 1);
}

TEST(PdfAtTime, SeriesMatchesRepeatedPropagation) {
  const auto series = pdf_series(5.0, 3, kDefaultGrid, kBenchmark);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[2].values, pdf_at_time(5.0, 3, kDefaultGrid, kBenchmark).values);
}

TEST(PdfAtTime, MassConcentratesNearDarkSpot) {
  const auto series = pdf_series(5.0, 3, kDefaultGrid, kBenchmark);
  const double m1 = mass_near(series[0], 1.0);
  const double m2 = mass_near(series[1], 1.0);
  const double m3 = mass_near(series[2], 1.0);
  EXPECT_LT(m1, m2);
  EXPECT_LT(m2, m3);

  // By t = 3 the highest point of the density sits at the origin.
  const auto& f3 = series[2];
  const auto peak = std::max_element(f3.values.begin(), f3.values.end()) - f3.values.begin();
  EXPECT_NEAR(f3.z(static_cast<std::size_t>(peak)), 0.0, 1e-12);
}

// The default [-60, 60] grid holds the mean for t <= 2. At t = 3 about
// 0.85% of the mass lies past +/-60, so the martingale check uses a wider grid.
TEST(PdfAtTime, MeanIsPreservedDefaultGrid) {
  const auto series = pdf_series(5.0, 2, kDefaultGrid, kBenchmark);
  for (const auto& f : series) EXPECT_NEAR(grid_stats(f).mean, 5.0, 0.1) << "t = " << f.t;
}

TEST(PdfAtTime, MeanIsPreservedWideGrid) {
  const auto series = pdf_series(5.0, 3, kWideGrid, kBenchmark, 2);
  for (const auto& f : series) {
    const auto stats = grid_stats(f);
    EXPECT_NEAR(stats.mean, 5.0, 0.1) << "t = " << f.t;
    EXPECT_GE(stats.mass, 1.0 - 1e-4);
  }
}

TEST(PdfAtTime, GridRefinementConverges) {
  const auto coarse = pdf_at_time(5.0, 3, kDefaultGrid, kBenchmark, 2);
  const auto fine = pdf_at_time(5.0, 3, {-60.0, 60.0, 12001}, kBenchmark, 2);
  double sup = 0.0;
  for (std::size_t k = 0; k < coarse.values.size(); ++k) {
    sup = std::max(sup, std::fabs(coarse.values[k] - fine.values[2 * k]));
  }
  EXPECT_LT(sup, 1e-4);
}

TEST(McSample, OneStepMoments) {
  shiner::NormalStream stream(5, 0);
  constexpr std::size_t n = 1'000'000;
  const auto xs = mc_sample(5.0, 1, n, kBenchmark, stream);
  EXPECT_NEAR(sample_mean(xs), 5.0, 4 * 5.1 / std::sqrt(double(n)));
  EXPECT_NEAR(sample_sd(xs), 5.1, 0.02 * 5.1);
}

TEST(McSample, ThreeStepMeanIsStartingPoint) {
  shiner::NormalStream stream(6, 0);
  const auto xs = mc_sample(5.0, 3, 1'000'000, kBenchmark, stream);
  const double se = sample_sd(xs) / std::sqrt(double(xs.size()));
  EXPECT_NEAR(sample_mean(xs), 5.0, 3 * se);
}

TEST(McSample, DeterministicPerSeed) {
  shiner::NormalStream a(17, 0), b(17, 0);
  EXPECT_EQ(mc_sample(1.0, 4, 1000, kBenchmark, a), mc_sample(1.0, 4, 1000, kBenchmark, b));
}

TEST(McSample, AgreesWithGridInTotalVariation) {
  const auto series = pdf_series(5.0, 3, kDefaultGrid, kBenchmark);
  for (const auto& f : series) {
    shiner::NormalStream stream(1000 + static_cast<std::uint64_t>(f.t), 0);
    const auto xs = mc_sample(5.0, f.t, 1'000'000, kBenchmark, stream);
    EXPECT_LT(oracle::tv_distance(f, xs, -20.0, 30.0, 200), 0.02) << "t = " << f.t;
  }
}
