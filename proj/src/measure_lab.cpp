#include "boltzlab/measure_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boltzlab/rng.hpp"

namespace boltzlab::measure {

namespace {

// Kernel contributions beyond this many bandwidths are dropped (relative
// error < 1e-27, far below every stated tolerance).
constexpr double kKernelCutoff = 8.0;

double percentile_radius(std::span<const Vec2> samples, double q) {
  std::vector<double> r(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) r[k] = samples[k].norm();
  std::sort(r.begin(), r.end());
  const std::size_t idx = std::min(r.size() - 1, static_cast<std::size_t>(q * r.size()));
  return r[idx];
}

FitResult least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < n; ++k) { sx += xs[k]; sy += ys[k]; }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit: degenerate abscissa");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = ys[k] - (fit.intercept + fit.slope * xs[k]);
    ss_res += e * e;
  }
  fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.stderr_slope = n > 2 ? std::sqrt(ss_res / ((n - 2) * sxx)) : 0.0;
  fit.window_lo = *std::min_element(xs.begin(), xs.end());
  fit.window_hi = *std::max_element(xs.begin(), xs.end());
  fit.points = n;
  return fit;
}

// Asymptotic Kolmogorov survival function with the usual small-sample
// effective-size correction.
double ks_p_value(double d, std::size_t m, std::size_t n) {
  const double ne = static_cast<double>(m) * n / static_cast<double>(m + n);
  const double sq = std::sqrt(ne);
  const double lambda = (sq + 0.12 + 0.11 / sq) * d;
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

Grid2D Grid2D::centered(double half_extent, int points_per_axis) {
  Grid2D g;
  g.nx = g.ny = points_per_axis;
  g.dx = g.dy = 2.0 * half_extent / (points_per_axis - 1);
  g.x0 = g.y0 = -half_extent;
  return g;
}

double DensityEstimate::max_value() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double DensityEstimate::lattice_mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * grid.dx * grid.dy;
}

double default_bandwidth(std::span<const Vec2> samples) {
  const double n = static_cast<double>(samples.size());
  double mx = 0, my = 0;
  for (const auto& s : samples) { mx += s.x; my += s.y; }
  mx /= n; my /= n;
  double vx = 0, vy = 0;
  for (const auto& s : samples) {
    vx += (s.x - mx) * (s.x - mx);
    vy += (s.y - my) * (s.y - my);
  }
  const double sigma = std::sqrt(0.5 * (vx + vy) / n);
  return (sigma > 0.0 ? sigma : 1.0) * std::pow(n, -1.0 / 6.0);
}

DensityEstimate kde(std::span<const Vec2> samples, std::span<const double> weights,
                    double bandwidth, const Grid2D& grid) {
  if (samples.empty()) throw std::invalid_argument("kde: no samples");
  if (!weights.empty() && weights.size() != samples.size())
    throw std::invalid_argument("kde: weights/samples size mismatch");
  if (grid.nx < 1 || grid.ny < 1) throw std::invalid_argument("kde: empty grid");

  DensityEstimate est;
  est.grid = grid;
  est.bandwidth = bandwidth > 0.0 ? bandwidth : default_bandwidth(samples);
  est.n_samples = samples.size();
  est.weights_used = !weights.empty();
  est.values.assign(static_cast<std::size_t>(grid.size()), 0.0);

  double wsum = 0.0;
  if (weights.empty()) {
    wsum = static_cast<double>(samples.size());
  } else {
    for (double w : weights) {
      if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("kde: weights must lie in [0,1]");
      wsum += w;
    }
    if (!(wsum > 0.0)) throw std::invalid_argument("kde: all weights are zero");
  }

  const double h = est.bandwidth;
  const double inv2h2 = 1.0 / (2.0 * h * h);
  const double norm = 1.0 / (2.0 * std::numbers::pi * h * h * wsum);
  const double reach = kKernelCutoff * h;

  // Scatter each sample onto the grid points it can reach; sample order is
  // fixed, so the reduction is deterministic.
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double w = weights.empty() ? 1.0 : weights[k];
    if (w == 0.0) continue;
    const Vec2 s = samples[k];
    const int i_lo = std::max(0, static_cast<int>(std::ceil((s.x - reach - grid.x0) / grid.dx)));
    const int i_hi = std::min(grid.nx - 1,
                              static_cast<int>(std::floor((s.x + reach - grid.x0) / grid.dx)));
    const int j_lo = std::max(0, static_cast<int>(std::ceil((s.y - reach - grid.y0) / grid.dy)));
    const int j_hi = std::min(grid.ny - 1,
                              static_cast<int>(std::floor((s.y + reach - grid.y0) / grid.dy)));
    for (int j = j_lo; j <= j_hi; ++j) {
      const double dy = grid.y(j) - s.y;
      for (int i = i_lo; i <= i_hi; ++i) {
        const double dx = grid.x(i) - s.x;
        est.values[static_cast<std::size_t>(j) * grid.nx + i] +=
            w * norm * std::exp(-(dx * dx + dy * dy) * inv2h2);
      }
    }
  }
  return est;
}

double tail_mass(std::span<const Vec2> samples, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("tail_mass: radius must be >= 0");
  if (samples.empty()) return 0.0;
  std::size_t count = 0;
  for (const auto& s : samples)
    if (s.norm() >= radius) ++count;
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

double ball_mass(std::span<const Vec2> samples, Vec2 center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball_mass: radius must be > 0");
  if (samples.empty()) return 0.0;
  std::size_t count = 0;
  const double r2 = radius * radius;
  for (const auto& s : samples)
    if ((s - center).norm2() <= r2) ++count;
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

ExpMoment exp_moment(std::span<const Vec2> samples, double lambda_prime, int resamples,
                     std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("exp_moment: no samples");
  if (!(lambda_prime > 0.0 && lambda_prime < 2.0))
    throw std::domain_error("exp_moment: lambda' must lie in (0, 2)");

  std::vector<double> expo(samples.size());
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    expo[k] = std::pow(samples[k].norm(), lambda_prime);
    m = std::max(m, expo[k]);
  }
  const auto lse_mean = [&](std::span<const std::size_t> idx) {
    double s = 0.0;
    if (idx.empty()) {
      for (double e : expo) s += std::exp(e - m);
      return std::exp(m + std::log(s / expo.size()));
    }
    for (std::size_t k : idx) s += std::exp(expo[k] - m);
    return std::exp(m + std::log(s / idx.size()));
  };

  ExpMoment out;
  out.mean = lse_mean({});

  auto rng = rng::make_stream(rng::kGolden + seed, 0, rng::Stream::kBootstrap);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  std::vector<double> boot(resamples);
  std::vector<std::size_t> idx(samples.size());
  for (int b = 0; b < resamples; ++b) {
    for (auto& i : idx) i = pick(rng);
    boot[b] = lse_mean(idx);
  }
  std::sort(boot.begin(), boot.end());
  double bm = 0, bv = 0;
  for (double v : boot) bm += v;
  bm /= resamples;
  for (double v : boot) bv += (v - bm) * (v - bm);
  out.ci.mean = out.mean;
  out.ci.se = std::sqrt(bv / resamples);
  out.ci.lo = boot[static_cast<std::size_t>(0.025 * resamples)];
  out.ci.hi = boot[static_cast<std::size_t>(0.975 * resamples)];
  return out;
}

FitResult fit_spatial_decay(const DensityEstimate& estimate, double lambda_prime,
                            double r_lo, double r_hi) {
  std::vector<double> xs, ys;
  const auto& g = estimate.grid;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double r = std::hypot(g.x(i), g.y(j));
      const double v = estimate.values[static_cast<std::size_t>(j) * g.nx + i];
      if (r < r_lo || r > r_hi || !(v > 0.0)) continue;
      xs.push_back(std::pow(r, lambda_prime));
      ys.push_back(std::log(v));
    }
  }
  if (xs.size() < 5)
    throw std::runtime_error("fit_spatial_decay: fewer than 5 usable grid points in the annulus");
  return least_squares(xs, ys);
}

FitResult fit_time_blowup(std::span<const std::pair<double, double>> sup_values) {
  if (sup_values.size() < 4)
    throw std::invalid_argument("fit_time_blowup: need at least 4 time points");
  std::vector<double> xs, ys;
  for (const auto& [t, sup] : sup_values) {
    if (!(t > 0.0 && t <= 1.0))
      throw std::invalid_argument("fit_time_blowup: t must lie in (0, 1]");
    if (!(sup > 0.0)) throw std::invalid_argument("fit_time_blowup: non-positive sup value");
    xs.push_back(std::log(t));
    ys.push_back(std::log(sup));
  }
  return least_squares(xs, ys);
}

KsResult two_sample_ks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("two_sample_ks: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / sa.size() -
                             static_cast<double>(j) / sb.size()));
  }
  KsResult res;
  res.statistic = d;
  res.p_value = ks_p_value(d, sa.size(), sb.size());
  return res;
}

BootstrapCI bootstrap_mean(std::span<const double> xs, int resamples, std::uint64_t seed) {
  if (xs.empty()) throw std::invalid_argument("bootstrap_mean: empty sample");
  BootstrapCI ci;
  for (double x : xs) ci.mean += x;
  ci.mean /= static_cast<double>(xs.size());

  auto rng = rng::make_stream(rng::kGolden + seed, 0, rng::Stream::kBootstrap);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  std::vector<double> boot(resamples);
  for (int b = 0; b < resamples; ++b) {
    double s = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) s += xs[pick(rng)];
    boot[b] = s / static_cast<double>(xs.size());
  }
  std::sort(boot.begin(), boot.end());
  double bm = 0, bv = 0;
  for (double v : boot) bm += v;
  bm /= resamples;
  for (double v : boot) bv += (v - bm) * (v - bm);
  ci.se = std::sqrt(bv / resamples);
  ci.lo = boot[static_cast<std::size_t>(0.025 * resamples)];
  ci.hi = boot[static_cast<std::size_t>(0.975 * resamples)];
  return ci;
}

CouplingCurve coupling_error_curve(
    const std::vector<std::vector<sim::Trajectory>>& trajectories_by_replica,
    const std::vector<double>& zetas, double t) {
  if (trajectories_by_replica.empty())
    throw std::invalid_argument("coupling_error_curve: no replicas");
  const std::size_t n_var = trajectories_by_replica.front().size();
  if (n_var < 2 || zetas.size() != n_var)
    throw std::invalid_argument("coupling_error_curve: zetas/trajectories mismatch");

  const auto snap_index = [&](const sim::Trajectory& traj) -> std::size_t {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
      const double d = std::abs(traj.snapshots[k].t - t);
      if (d < best_d) { best_d = d; best = k; }
    }
    if (!(best_d < 1e-9))
      throw std::invalid_argument("coupling_error_curve: no snapshot aligned at requested t");
    return best;
  };

  CouplingCurve curve;
  std::vector<double> log_z, log_e;
  for (std::size_t s = 0; s + 1 < n_var; ++s) {
    std::vector<double> per_replica;
    for (const auto& variants : trajectories_by_replica) {
      if (variants.size() != n_var)
        throw std::invalid_argument("coupling_error_curve: replica with wrong variant count");
      const auto& ref = variants.back();
      const auto& var = variants[s];
      const std::size_t k = snap_index(var);
      const auto& sv = var.snapshots[k].v;
      const auto& sr = ref.snapshots[snap_index(ref)].v;
      if (sv.size() != sr.size())
        throw std::invalid_argument("coupling_error_curve: misaligned ensembles");
      double mean = 0.0;
      for (std::size_t p = 0; p < sv.size(); ++p) mean += (sv[p] - sr[p]).norm();
      per_replica.push_back(mean / static_cast<double>(sv.size()));
    }
    CouplingPoint pt;
    pt.zeta = zetas[s];
    pt.error = bootstrap_mean(per_replica, 1000, s);
    curve.points.push_back(pt);
    if (pt.error.mean > 0.0) {
      log_z.push_back(std::log(pt.zeta));
      log_e.push_back(std::log(pt.error.mean));
    }
  }
  if (log_z.size() >= 2) curve.loglog_fit = least_squares(log_z, log_e);
  return curve;
}

}  // namespace boltzlab::measure
