// Measure-level statistics over particle ensembles: kernel density
// estimates, tail and ball masses, exponential moments, decay/blow-up fits,
// two-sample Kolmogorov-Smirnov, and coupling-error curves.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boltzlab/particle_simulator.hpp"
#include "boltzlab/vec2.hpp"

namespace boltzlab::measure {

struct Grid2D {
  double x0 = 0.0, y0 = 0.0;  // lower-left corner
  double dx = 0.1, dy = 0.1;
  int nx = 0, ny = 0;

  double x(int i) const { return x0 + i * dx; }
  double y(int j) const { return y0 + j * dy; }
  int size() const { return nx * ny; }
  static Grid2D centered(double half_extent, int points_per_axis);
};

struct DensityEstimate {
  Grid2D grid;
  double bandwidth = 0.0;
  std::vector<double> values;  // row-major, index j*nx + i
  std::size_t n_samples = 0;
  bool weights_used = false;

  double max_value() const;
  double lattice_mass() const;  // sum * cell area
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::size_t points = 0;
};

struct BootstrapCI {
  double mean = 0.0;
  double se = 0.0;
  double lo = 0.0;  // 2.5% percentile of bootstrap means
  double hi = 0.0;  // 97.5%
};

// Silverman-style default bandwidth h = sigma_hat * n^{-1/6} for planar data.
double default_bandwidth(std::span<const Vec2> samples);

// Gaussian product-kernel estimate on the grid.  weights empty = raw
// (divide by n); otherwise divide by the weight sum.  bandwidth <= 0 picks
// the default rule.
DensityEstimate kde(std::span<const Vec2> samples, std::span<const double> weights,
                    double bandwidth, const Grid2D& grid);

// Fraction of samples with |v| >= radius.
double tail_mass(std::span<const Vec2> samples, double radius);

// Fraction of samples inside the closed ball.
double ball_mass(std::span<const Vec2> samples, Vec2 center, double radius);

// Mean of exp(|v|^{lambda'}) computed in log-sum-exp form, with a bootstrap
// CI over the samples.
struct ExpMoment {
  double mean = 0.0;
  BootstrapCI ci;
};
ExpMoment exp_moment(std::span<const Vec2> samples, double lambda_prime,
                     int resamples = 1000, std::uint64_t seed = 0);

// Least-squares fit of log f_hat(v) against |v|^{lambda'} over the annulus
// r_lo <= |v| <= r_hi; a negative slope is the measured spatial decay rate.
FitResult fit_spatial_decay(const DensityEstimate& estimate, double lambda_prime,
                            double r_lo, double r_hi);

// Least-squares slope of log sup f_hat_t against log t; -slope is the
// empirical blow-up exponent.
FitResult fit_time_blowup(std::span<const std::pair<double, double>> sup_values);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool reject(double level) const { return p_value < level; }
};
KsResult two_sample_ks(std::span<const double> a, std::span<const double> b);

// Bootstrap of the mean of xs; fixed seed offset for reproducibility.
BootstrapCI bootstrap_mean(std::span<const double> xs, int resamples = 1000,
                           std::uint64_t seed = 0);

// Mean |V^{(s)} - V^{(ref)}| at the snapshot closest to t, per schedule, with
// a bootstrap CI over replicas, plus the fitted log-log slope against zeta.
struct CouplingPoint {
  double zeta = 0.0;
  BootstrapCI error;
};
struct CouplingCurve {
  std::vector<CouplingPoint> points;  // in the order the schedules were given
  FitResult loglog_fit;               // log error vs log zeta
};
// trajectories_by_replica[r] holds the coupled_run output of replica r, whose
// last entry is the reference schedule.
CouplingCurve coupling_error_curve(
    const std::vector<std::vector<sim::Trajectory>>& trajectories_by_replica,
    const std::vector<double>& zetas, double t);

}  // namespace boltzlab::measure
