#include "boltzlab/verify_suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "boltzlab/collision_kernel.hpp"
#include "boltzlab/exponent_engine.hpp"
#include "boltzlab/measure_lab.hpp"
#include "boltzlab/particle_simulator.hpp"
#include "boltzlab/rng.hpp"

namespace boltzlab::verify {

namespace {

using kernel::CutoffSchedule;
using kernel::KernelParams;
using sim::Scheme;
using sim::SimConfig;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& what) {
    detail << (detail.str().empty() ? "" : "; ") << what;
  }
};

KernelParams baseline_params() { return {0.25, 1.0, 1.5, 1.0}; }

CutoffSchedule baseline_schedule() {
  return CutoffSchedule::make(baseline_params(), 0.05, 0.1);
}

SimConfig base_sim(std::uint64_t seed, std::uint64_t replica) {
  SimConfig c;
  c.kernel = baseline_params();
  c.schedule = baseline_schedule();
  c.master_seed = seed;
  c.replica = replica;
  return c;
}

// Independent oracle for alpha_*: iterate phi from 0.
double alpha_star_fixed_point(const KernelParams& p) {
  double a = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double next = exponents::phi_alpha(a, p);
    if (std::abs(next - a) < 1e-14) return next;
    a = next;
  }
  return a;
}

// ---- A1: exact identities on a (gamma, nu) grid ----------------------------

CriterionResult criterion_a1() {
  Check c;
  int density_pts = 0, full_pts = 0;
  double worst_alpha = 0.0, worst_kappa = 0.0, worst_pq = 0.0;
  for (int gi = 0; gi < 50; ++gi) {
    const double gamma = 0.02 + (1.0 - 0.02) * gi / 49.0;
    for (int ni = 0; ni < 50; ++ni) {
      const double nu = 0.005 + (0.49 - 0.005) * ni / 49.0;
      KernelParams p{nu, gamma, 0.5 * (gamma + 2.0), 0.25 * (gamma + 2.0)};
      const double phi0 = exponents::phi_alpha(0.0, p);
      const double phi2 = exponents::phi_alpha(2.0, p);
      const double d_bd = gamma / (2.0 * gamma + 1.0) - nu;
      const double f_bd = gamma / (4.0 * gamma + 9.0) - nu;
      if (std::abs(d_bd) > 1e-12)
        c.expect((phi0 > 0.0) == (d_bd > 0.0), "sign(phi(0)) mismatch");
      if (std::abs(f_bd) > 1e-12)
        c.expect((phi2 > 2.0) == (f_bd > 0.0), "sign(phi(2)-2) mismatch");

      if (phi0 > 0.0) {
        ++density_pts;
        const auto closed = exponents::alpha_star(p);
        c.expect(closed.has_value(), "alpha_* absent in density regime");
        const double iter = alpha_star_fixed_point(p);
        worst_alpha = std::max(worst_alpha, std::abs(*closed - iter));
        const auto seq = exponents::bootstrap_sequences(p, 2);
        const auto kap = exponents::kappa_exponent(p);
        worst_kappa = std::max(worst_kappa, std::abs(*kap - seq.kappa[1]));
      }
      if (phi2 > 2.0) {
        ++full_pts;
        const auto so = exponents::sobolev_orders(p);
        c.expect(so.has_value(), "sobolev orders absent in full regime");
        worst_pq = std::max(worst_pq, std::abs(so->p1 - 2.0 / (3.0 - phi2)));
        worst_pq = std::max(worst_pq, std::abs(so->p2 - 2.0 / (4.0 - phi2)));
      }
    }
  }
  c.expect(worst_alpha <= 1e-10, "alpha_* closed-form vs fixed point > 1e-10");
  c.expect(worst_kappa <= 1e-10, "kappa vs kappa_1 > 1e-10");
  c.expect(worst_pq <= 1e-10, "p_q identity > 1e-10");
  std::ostringstream os;
  os << "density pts " << density_pts << ", full pts " << full_pts << ", max |alpha gap| "
     << worst_alpha << ", max |kappa gap| " << worst_kappa << ", max |p_q gap| " << worst_pq;
  c.note(os.str());
  return {"A1", "exact identities on (gamma,nu) grid", c.ok, c.detail.str(), 0.0};
}

// ---- A2: 3D parameter map ---------------------------------------------------

CriterionResult criterion_a2() {
  Check c;
  const auto m9 = exponents::from_dimension3(9.0);
  c.expect(std::abs(m9.nu - m9.gamma / (2.0 * m9.gamma + 1.0)) <= 1e-15,
           "s=9 does not sit on the density boundary");
  c.expect(!m9.density_regime, "s=9 must classify strictly (boundary excluded)");
  const auto lo = exponents::from_dimension3(29.892);
  const auto hi = exponents::from_dimension3(29.893);
  c.expect(!lo.full_regime && hi.full_regime,
           "full-regime flag must flip between s=29.892 and s=29.893");
  const double threshold = 16.0 + std::sqrt(193.0);
  c.expect(threshold > 29.892 && threshold < 29.893, "threshold outside bracketing interval");
  std::ostringstream os;
  os << "s=9 -> (nu,gamma)=(" << m9.nu << "," << m9.gamma << "), full threshold " << threshold;
  c.note(os.str());
  return {"A2", "3D mapping boundaries", c.ok, c.detail.str(), 0.0};
}

// ---- A3: kernel exactness ---------------------------------------------------

CriterionResult criterion_a3(std::uint64_t seed) {
  Check c;
  double worst_rt = 0.0;
  for (double nu : {0.1, 0.25, 0.45}) {
    for (int k = 0; k <= 200; ++k) {
      const double x = 0.01 + (std::numbers::pi / 2.0 - 0.01) * k / 200.0;
      worst_rt = std::max(worst_rt,
                          std::abs(kernel::g_inverse(kernel::G_tail(x, nu), nu) - x));
    }
  }
  c.expect(worst_rt <= 1e-10, "g o G round trip > 1e-10");

  auto rng = rng::make_stream(seed, 3, rng::Stream::kInit);
  std::normal_distribution<double> normal(0.0, 2.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
  double worst_p = 0.0, worst_e = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const Vec2 v{normal(rng), normal(rng)};
    const Vec2 vs{normal(rng), normal(rng)};
    const auto [vp, vsp] = kernel::collide(v, vs, angle(rng));
    const Vec2 dp = (vp + vsp) - (v + vs);
    const double e0 = v.norm2() + vs.norm2();
    const double e1 = vp.norm2() + vsp.norm2();
    worst_p = std::max(worst_p, dp.norm() / std::max(1.0, (v + vs).norm()));
    worst_e = std::max(worst_e, std::abs(e1 - e0) / std::max(1.0, e0));
  }
  c.expect(worst_p <= 1e-12, "momentum conservation > 1e-12");
  c.expect(worst_e <= 1e-12, "energy conservation > 1e-12");

  const double eps = 0.01, ge = 10.0;
  bool plateaus = true;
  for (int k = 0; k <= 100; ++k) {
    const double lo = eps * k / 100.0;
    plateaus = plateaus && kernel::phi_eps(lo, eps, ge) == 2.0 * eps;
    const double mid = 3.0 * eps + (ge - 1.0 - 3.0 * eps) * k / 100.0;
    plateaus = plateaus && kernel::phi_eps(mid, eps, ge) == mid;
    const double hig = ge + 10.0 * k / 100.0;
    plateaus = plateaus && kernel::phi_eps(hig, eps, ge) == ge;
  }
  c.expect(plateaus, "phi_eps plateau/identity regions not exact");
  std::ostringstream os;
  os << "max round trip " << worst_rt << ", max momentum err " << worst_p
     << ", max energy err " << worst_e;
  c.note(os.str());
  return {"A3", "kernel exactness", c.ok, c.detail.str(), 0.0};
}

// ---- A4: Dirac degeneracy ---------------------------------------------------

CriterionResult criterion_a4(std::uint64_t seed) {
  Check c;
  SimConfig cfg = base_sim(seed, 4);
  cfg.law = sim::DiracLaw{{1.0, 2.0}};
  cfg.n = 1000;
  cfg.t_end = 1.0;
  cfg.snapshot_times = {0.25, 0.5, 1.0};
  const auto traj = sim::run(cfg);
  bool frozen = true;
  for (const auto& snap : traj.snapshots)
    for (const auto& v : snap.v)
      frozen = frozen && v.x == 1.0 && v.y == 2.0;
  c.expect(frozen, "a particle moved under a Dirac initial law");
  std::ostringstream os;
  os << traj.arrivals << " arrivals, " << traj.accepted << " accepted, zero displacement";
  c.note(os.str());
  return {"A4", "Dirac degeneracy", c.ok, c.detail.str(), 0.0};
}

// ---- A5: mean conservation --------------------------------------------------

CriterionResult criterion_a5(Profile profile, std::uint64_t seed) {
  Check c;
  const std::size_t n = profile == Profile::kFull ? 100000 : 10000;
  const int replicas = profile == Profile::kFull ? 32 : 8;
  std::vector<double> dpx, dpy, de;
  for (int r = 0; r < replicas; ++r) {
    SimConfig cfg = base_sim(seed, 50 + static_cast<std::uint64_t>(r));
    cfg.law = sim::GaussianLaw{};
    cfg.n = n;
    cfg.t_end = 1.0;
    cfg.snapshot_times = {1.0};
    auto ens0 = sim::init_ensemble(cfg.law, cfg.n, cfg.master_seed, cfg.replica);
    const auto traj = sim::run(cfg);
    const auto& v1 = traj.snapshots.back().v;
    double px = 0, py = 0, e = 0;
    for (std::size_t k = 0; k < v1.size(); ++k) {
      px += v1[k].x - ens0.v[k].x;
      py += v1[k].y - ens0.v[k].y;
      e += v1[k].norm2() - ens0.v[k].norm2();
    }
    const double inv = 1.0 / static_cast<double>(n);
    dpx.push_back(px * inv);
    dpy.push_back(py * inv);
    de.push_back(e * inv);
  }
  const auto bx = measure::bootstrap_mean(dpx, 1000, 5);
  const auto by = measure::bootstrap_mean(dpy, 1000, 6);
  const auto be = measure::bootstrap_mean(de, 1000, 7);
  c.expect(std::abs(bx.mean) <= 3.0 * bx.se, "momentum-x drift beyond 3 SE");
  c.expect(std::abs(by.mean) <= 3.0 * by.se, "momentum-y drift beyond 3 SE");
  c.expect(std::abs(be.mean) <= 3.0 * be.se, "energy drift beyond 3 SE");
  std::ostringstream os;
  os << "drift px " << bx.mean << " (se " << bx.se << "), py " << by.mean << " (se " << by.se
     << "), energy " << be.mean << " (se " << be.se << ")";
  c.note(os.str());
  return {"A5", "mean conservation", c.ok, c.detail.str(), 0.0};
}

// ---- A6: fictive vs real equivalence in law ---------------------------------

CriterionResult criterion_a6(Profile profile, std::uint64_t seed) {
  Check c;
  const int replicas = profile == Profile::kFull ? 100 : 50;
  std::vector<double> fx, fy, fr, rx, ry, rr;
  for (int r = 0; r < replicas; ++r) {
    for (const Scheme scheme : {Scheme::kFictive, Scheme::kReal}) {
      SimConfig cfg = base_sim(seed, (scheme == Scheme::kReal ? 1000 : 0) +
                                          static_cast<std::uint64_t>(r));
      cfg.law = sim::GaussianLaw{};
      cfg.n = 2000;
      cfg.t_end = 0.5;
      cfg.snapshot_times = {0.5};
      cfg.scheme = scheme;
      const auto traj = sim::run(cfg);
      for (const auto& v : traj.snapshots.back().v) {
        if (scheme == Scheme::kFictive) {
          fx.push_back(v.x);
          fy.push_back(v.y);
          fr.push_back(v.norm());
        } else {
          rx.push_back(v.x);
          ry.push_back(v.y);
          rr.push_back(v.norm());
        }
      }
    }
  }
  const auto kx = measure::two_sample_ks(fx, rx);
  const auto ky = measure::two_sample_ks(fy, ry);
  const auto kr = measure::two_sample_ks(fr, rr);
  const double level = 0.01 / 3.0;  // Bonferroni over the three tests
  c.expect(kx.p_value >= level, "KS reject on vx");
  c.expect(ky.p_value >= level, "KS reject on vy");
  c.expect(kr.p_value >= level, "KS reject on |v|");
  std::ostringstream os;
  os << "KS p-values vx " << kx.p_value << ", vy " << ky.p_value << ", |v| " << kr.p_value
     << " (level " << level << ")";
  c.note(os.str());
  return {"A6", "fictive vs real scheme equivalence", c.ok, c.detail.str(), 0.0};
}

// ---- A7: Poisson clock ------------------------------------------------------

CriterionResult criterion_a7(std::uint64_t seed) {
  Check c;
  const KernelParams p = baseline_params();
  const std::vector<std::pair<double, double>> knobs = {
      {0.05, 0.1}, {0.02, 0.05}, {0.1, 0.2}};
  std::ostringstream os;
  int idx = 0;
  for (const auto& [eps, zeta] : knobs) {
    SimConfig cfg = base_sim(seed, 70 + static_cast<std::uint64_t>(idx++));
    cfg.schedule = CutoffSchedule::make(p, eps, zeta);
    cfg.law = sim::GaussianLaw{};
    cfg.n = 1000;
    cfg.t_end = 1.0;
    cfg.snapshot_times = {1.0};
    const auto traj = sim::run(cfg);
    const double mean = static_cast<double>(cfg.n) * cfg.schedule.rate * cfg.t_end;
    const double sigma = std::sqrt(mean);
    const double dev = std::abs(static_cast<double>(traj.arrivals) - mean);
    c.expect(dev <= 4.0 * sigma, "arrival count beyond 4 sigma");
    os << "[eps " << eps << " zeta " << zeta << ": " << traj.arrivals << " vs " << mean
       << " +- " << sigma << "] ";
  }
  c.note(os.str());
  return {"A7", "Poisson clock statistics", c.ok, c.detail.str(), 0.0};
}

// ---- A8: coupling envelope --------------------------------------------------

CriterionResult criterion_a8(Profile profile, std::uint64_t seed) {
  Check c;
  const KernelParams p = baseline_params();  // gamma = 1, nu = 0.25
  const std::vector<double> ladder = {0.2, 0.1, 0.05, 0.025, 0.01};  // last = reference
  std::vector<CutoffSchedule> schedules;
  for (double z : ladder) schedules.push_back(CutoffSchedule::make(p, 0.05, z));

  const int replicas = profile == Profile::kFull ? 32 : 16;
  std::vector<std::vector<sim::Trajectory>> by_replica;
  for (int r = 0; r < replicas; ++r) {
    SimConfig cfg = base_sim(seed, 2000 + static_cast<std::uint64_t>(r));
    cfg.law = sim::GaussianLaw{};
    cfg.n = 2000;
    cfg.t_end = 0.5;
    cfg.snapshot_times = {0.5};
    by_replica.push_back(sim::coupled_run(cfg, schedules));
  }
  const auto curve = measure::coupling_error_curve(by_replica, ladder, 0.5);

  // CI-aware monotonicity: a rung may only exceed its coarser neighbour if
  // the confidence intervals overlap.
  for (std::size_t k = 0; k + 1 < curve.points.size(); ++k) {
    const auto& coarse = curve.points[k].error;
    const auto& fine = curve.points[k + 1].error;
    c.expect(fine.lo <= coarse.hi, "coupling error increases significantly under refinement");
  }
  // One-sided envelope anchored at the coarsest rung: e(zeta) <= C zeta^{1-nu}.
  const double c_hat = curve.points.front().error.hi /
                       std::pow(curve.points.front().zeta, 1.0 - p.nu);
  for (const auto& pt : curve.points)
    c.expect(pt.error.lo <= c_hat * std::pow(pt.zeta, 1.0 - p.nu),
             "envelope e <= C zeta^{1-nu} violated");
  std::ostringstream os;
  os << "errors:";
  for (const auto& pt : curve.points)
    os << " (zeta " << pt.zeta << ": " << pt.error.mean << " +- " << pt.error.se << ")";
  os << "; log-log slope " << curve.loglog_fit.slope << " vs 1-nu = " << 1.0 - p.nu;
  c.note(os.str());
  return {"A8", "coupling envelope", c.ok, c.detail.str(), 0.0};
}

// ---- A9: tail decay and exponential moment ----------------------------------

CriterionResult criterion_a9(std::uint64_t seed) {
  Check c;
  SimConfig cfg = base_sim(seed, 9);
  cfg.law = sim::TwoPointLaw{{1.0, 0.0}, {-1.0, 0.0}, 0.5};
  cfg.n = 100000;
  cfg.t_end = 1.0;
  cfg.snapshot_times = {1.0};
  const auto ens0 = sim::init_ensemble(cfg.law, cfg.n, cfg.master_seed, cfg.replica);
  const auto traj = sim::run(cfg);
  const auto& v1 = traj.snapshots.back().v;

  std::ostringstream os;
  for (double radius : {2.0, 3.0, 4.0}) {
    const double tm = measure::tail_mass(v1, radius);
    const double score = tm > 0.0 ? -std::log(tm) / radius
                                  : std::numeric_limits<double>::infinity();
    c.expect(score >= 0.2, "tail bound -log f(|v|>=R)/R < 0.2 at R=" + std::to_string(radius));
    os << "[R " << radius << ": mass " << tm << ", score " << score << "] ";
  }
  const auto m0 = measure::exp_moment(ens0.v, 1.0, 1000, 90);
  const auto m1 = measure::exp_moment(v1, 1.0, 1000, 91);
  c.expect(std::isfinite(m1.mean), "exp moment not finite");
  c.expect(m1.mean <= 3.0 * m0.mean, "exp moment exceeds 3x its initial value");
  os << "exp moment " << m1.mean << " (CI " << m1.ci.lo << ".." << m1.ci.hi << ") vs initial "
     << m0.mean;
  c.note(os.str());
  return {"A9", "tail decay and exponential moment", c.ok, c.detail.str(), 0.0};
}

// ---- A10: density regularization and blow-up shape --------------------------

CriterionResult criterion_a10(Profile profile, std::uint64_t seed) {
  Check c;
  KernelParams p{0.05, 1.0, 1.5, 1.0};  // full regime: eta is defined
  SimConfig cfg;
  cfg.kernel = p;
  cfg.schedule = CutoffSchedule::make(p, 0.01, 0.05);
  cfg.master_seed = seed;
  cfg.replica = 10;
  cfg.law = sim::TwoPointLaw{{1.0, 0.0}, {-1.0, 0.0}, 0.5};
  cfg.n = profile == Profile::kFull ? 100000 : 10000;
  cfg.t_end = 1.0;
  cfg.snapshot_times = {0.05, 0.1, 0.2, 0.5, 1.0};
  const auto traj = sim::run(cfg);

  auto molli_rng = rng::make_stream(seed, 10, rng::Stream::kMollify);
  const auto grid = measure::Grid2D::centered(6.0, 121);
  std::vector<std::pair<double, double>> sups;
  bool finite = true;
  for (const auto& snap : traj.snapshots) {
    sim::Ensemble ens;
    ens.v = snap.v;
    ens.running_max = snap.running_max;
    ens.time = snap.t;
    const auto moll = sim::mollify(ens, snap.t, cfg.schedule, molli_rng);
    const auto est = measure::kde(moll.f_samples, moll.g_weights, 0.0, grid);
    const double sup = est.max_value();
    finite = finite && std::isfinite(sup) && sup > 0.0;
    sups.emplace_back(snap.t, sup);
  }
  c.expect(finite, "weighted KDE sup not finite/positive at some t");

  const auto fit = measure::fit_time_blowup(sups);
  const double eta_emp = -fit.slope;
  const auto eta = exponents::eta_exponent(p);
  c.expect(std::isfinite(eta_emp), "eta_emp not finite");
  c.expect(eta.has_value(), "eta undefined in the full regime");
  if (eta) c.expect(eta_emp <= *eta, "eta_emp exceeds the theoretical envelope eta");
  std::ostringstream os;
  os << "sup f_hat:";
  for (const auto& [t, s] : sups) os << " (t " << t << ": " << s << ")";
  os << "; eta_emp " << eta_emp << " <= eta " << (eta ? *eta : 0.0)
     << " (non-sharp upper bound, sanity envelope only)";
  c.note(os.str());
  return {"A10", "density regularization and blow-up shape", c.ok, c.detail.str(), 0.0};
}

// ---- A11: estimator self-tests ----------------------------------------------

CriterionResult criterion_a11(std::uint64_t seed) {
  Check c;
  const auto grid = measure::Grid2D::centered(8.0, 161);

  measure::DensityEstimate expo;
  expo.grid = grid;
  expo.bandwidth = 1.0;
  expo.n_samples = 1;
  expo.values.resize(static_cast<std::size_t>(grid.size()));
  measure::DensityEstimate gauss = expo;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double r = std::hypot(grid.x(i), grid.y(j));
      expo.values[static_cast<std::size_t>(j) * grid.nx + i] = 0.02 * std::exp(-r);
      gauss.values[static_cast<std::size_t>(j) * grid.nx + i] = 0.1 * std::exp(-0.5 * r * r);
    }
  }
  const auto fe = measure::fit_spatial_decay(expo, 1.0, 2.0, 6.0);
  const auto fg = measure::fit_spatial_decay(gauss, 2.0, 2.0, 6.0);
  c.expect(std::abs(fe.slope + 1.0) <= 0.05, "exponential plant: slope not -1 +- 0.05");
  c.expect(std::abs(fg.slope + 0.5) <= 0.05, "gaussian plant: slope not -1/2 +- 0.05");

  auto rng = rng::make_stream(seed, 11, rng::Stream::kInit);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec2> samples(10000);
  for (auto& s : samples) s = {normal(rng), normal(rng)};
  const auto est = measure::kde(samples, {}, 0.0, measure::Grid2D::centered(5.0, 101));
  const double mass = est.lattice_mass();
  c.expect(std::abs(mass - 1.0) <= 0.02, "KDE lattice mass outside 1 +- 0.02");
  std::ostringstream os;
  os << "plant slopes " << fe.slope << " and " << fg.slope << ", KDE mass " << mass;
  c.note(os.str());
  return {"A11", "estimator self-tests", c.ok, c.detail.str(), 0.0};
}

}  // namespace

std::vector<CriterionResult> run_all(Profile profile, std::uint64_t seed) {
  std::vector<std::function<CriterionResult()>> criteria = {
      [&] { return criterion_a1(); },
      [&] { return criterion_a2(); },
      [&] { return criterion_a3(seed); },
      [&] { return criterion_a4(seed); },
      [&] { return criterion_a5(profile, seed); },
      [&] { return criterion_a6(profile, seed); },
      [&] { return criterion_a7(seed); },
      [&] { return criterion_a8(profile, seed); },
      [&] { return criterion_a9(seed); },
      [&] { return criterion_a10(profile, seed); },
      [&] { return criterion_a11(seed); },
  };
  std::vector<CriterionResult> results;
  for (auto& fn : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = fn();
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << (r.pass ? " PASS " : " FAIL ") << "[" << r.title << "] (";
    os.precision(2);
    os << std::fixed << r.seconds << "s) " << r.detail << '\n';
    os.unsetf(std::ios::fixed);
    os.precision(6);
  }
  return os.str();
}

std::string results_to_json(const std::vector<CriterionResult>& results, Profile profile,
                            std::uint64_t seed) {
  nlohmann::json j;
  j["profile"] = profile == Profile::kFull ? "full" : "quick";
  j["seed"] = seed;
  j["criteria"] = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    j["criteria"].push_back({{"id", r.id},
                             {"title", r.title},
                             {"pass", r.pass},
                             {"detail", r.detail},
                             {"seconds", r.seconds}});
  }
  j["all_passed"] = all;
  return j.dump(2);
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace boltzlab::verify
