#include "boltzlab/particle_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boltzlab::sim {

namespace {

using kernel::apply_deflection;
using kernel::collide;
using kernel::g_inverse;
using kernel::phi_eps;
using kernel::smooth_angle_cutoff;

Vec2 sample_simple(const SimpleLaw& law, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& l) -> Vec2 {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, DiracLaw>) {
          return l.v0;
        } else if constexpr (std::is_same_v<T, TwoPointLaw>) {
          std::uniform_real_distribution<double> unif(0.0, 1.0);
          return unif(rng) < l.weight_a ? l.a : l.b;
        } else if constexpr (std::is_same_v<T, GaussianLaw>) {
          // Cholesky of [[sxx, sxy], [sxy, syy]]
          if (!(l.sxx >= 0.0 && l.syy >= 0.0 && l.sxx * l.syy >= l.sxy * l.sxy))
            throw std::invalid_argument("gaussian law: covariance not PSD");
          std::normal_distribution<double> normal(0.0, 1.0);
          const double z1 = normal(rng);
          const double z2 = normal(rng);
          const double a = std::sqrt(l.sxx);
          const double b = a > 0.0 ? l.sxy / a : 0.0;
          const double c = std::sqrt(std::max(0.0, l.syy - b * b));
          return {l.mean.x + a * z1, l.mean.y + b * z1 + c * z2};
        } else {
          static_assert(std::is_same_v<T, UniformDiscLaw>);
          std::uniform_real_distribution<double> unif(0.0, 1.0);
          const double r = l.radius * std::sqrt(unif(rng));
          const double phi = 2.0 * std::numbers::pi * unif(rng);
          return {l.center.x + r * std::cos(phi), l.center.y + r * std::sin(phi)};
        }
      },
      law);
}

Vec2 sample_law(const InitialLaw& law, std::mt19937_64& rng) {
  if (const auto* mix = std::get_if<MixtureLaw>(&law)) {
    if (mix->components.empty() || mix->weights.size() != mix->components.size())
      throw std::invalid_argument("mixture law: weights/components mismatch");
    double total = 0.0;
    for (double w : mix->weights) {
      if (w < 0.0) throw std::invalid_argument("mixture law: negative weight");
      total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("mixture law: zero total weight");
    std::uniform_real_distribution<double> unif(0.0, total);
    double r = unif(rng);
    for (std::size_t k = 0; k < mix->components.size(); ++k) {
      r -= mix->weights[k];
      if (r <= 0.0 || k + 1 == mix->components.size())
        return sample_simple(mix->components[k], rng);
    }
  }
  return std::visit(
      [&](const auto& l) -> Vec2 {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, MixtureLaw>) {
          throw std::logic_error("unreachable");
        } else {
          return sample_simple(SimpleLaw{l}, rng);
        }
      },
      law);
}

// Partner uniform on {0..n-1} \ {i}.
std::size_t draw_partner(std::size_t i, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 2);
  const std::size_t j = dist(rng);
  return j >= i ? j + 1 : j;
}

void apply_jump(Ensemble& ens, std::size_t i, std::size_t j, double z,
                const CutoffSchedule& schedule, bool symmetric) {
  const double weight = smooth_angle_cutoff(z, schedule.g_zeta);
  if (weight == 0.0) {
    ++ens.lineage.events;
    return;
  }
  const double theta = g_inverse(z, schedule.nu);
  const Vec2 w = ens.v[i] - ens.v[j];
  ens.v[i] += weight * apply_deflection(theta, w);
  ens.running_max[i] = std::max(ens.running_max[i], ens.v[i].norm());
  if (symmetric) {
    ens.v[j] += weight * apply_deflection(theta, Vec2{-w.x, -w.y});
    ens.running_max[j] = std::max(ens.running_max[j], ens.v[j].norm());
  }
  ++ens.lineage.events;
}

}  // namespace

Ensemble init_ensemble(const InitialLaw& law, std::size_t n, std::uint64_t master_seed,
                       std::uint64_t replica) {
  if (n < 2) throw std::invalid_argument("init_ensemble: need at least 2 particles");
  Ensemble ens;
  ens.lineage = SeedLineage{master_seed, replica, 0};
  ens.v.reserve(n);
  ens.running_max.reserve(n);
  auto rng = rng::make_stream(master_seed, replica, rng::Stream::kInit);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 v = sample_law(law, rng);
    ens.v.push_back(v);
    ens.running_max.push_back(v.norm());
  }
  return ens;
}

void fictive_step(Ensemble& ens, const EventDraw& event, const CutoffSchedule& schedule) {
  const std::size_t i = event.particle;
  const std::size_t j = event.partner;
  if (i >= ens.size() || j >= ens.size() || i == j)
    throw std::invalid_argument("fictive_step: bad particle indices");
  ens.time = event.t_event;
  ++ens.arrivals;
  const double x = (ens.v[i] - ens.v[j]).norm();
  const double rate = std::pow(phi_eps(x, schedule.epsilon, schedule.gamma_eps), schedule.gamma);
  if (event.u <= rate) apply_jump(ens, i, j, event.z, schedule, false);
}

void real_step(Ensemble& ens, double t_arrival, std::size_t particle,
               const CutoffSchedule& schedule, std::mt19937_64& partner_rng,
               std::mt19937_64& angle_rng, std::mt19937_64& thinning_rng) {
  if (particle >= ens.size()) throw std::invalid_argument("real_step: bad particle index");
  ens.time = t_arrival;
  ++ens.arrivals;
  const std::size_t j = draw_partner(particle, ens.size(), partner_rng);
  const double x = (ens.v[particle] - ens.v[j]).norm();
  const double accept =
      std::pow(phi_eps(x, schedule.epsilon, schedule.gamma_eps), schedule.gamma) /
      (2.0 * std::pow(schedule.gamma_eps, schedule.gamma));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(thinning_rng) > accept) return;  // cemetery
  std::uniform_real_distribution<double> zdist(-(schedule.g_zeta + 1.0), schedule.g_zeta + 1.0);
  apply_jump(ens, particle, j, zdist(angle_rng), schedule, false);
}

Trajectory run(const SimConfig& config) {
  if (!(config.t_end > 0.0)) throw std::invalid_argument("run: t_end must be positive");
  if (config.snapshot_times.empty()) throw std::invalid_argument("run: no snapshot times");
  for (std::size_t k = 0; k < config.snapshot_times.size(); ++k) {
    const double t = config.snapshot_times[k];
    if (!(t > 0.0 && t <= config.t_end) ||
        (k > 0 && !(t > config.snapshot_times[k - 1])))
      throw std::invalid_argument("run: snapshot times must be strictly increasing in (0, t_end]");
  }

  Ensemble ens = init_ensemble(config.law, config.n, config.master_seed, config.replica);
  auto arrival_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kArrival);
  auto target_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kTarget);
  auto partner_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kPartner);
  auto angle_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kAngle);
  auto thinning_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kThinning);

  // The symmetric variant moves two particles per event, so it runs at half
  // the arrival rate to preserve the per-particle collision frequency.
  const double total_rate =
      static_cast<double>(config.n) * config.schedule.rate * (config.symmetric_pairs ? 0.5 : 1.0);
  std::exponential_distribution<double> interarrival(total_rate);
  std::uniform_int_distribution<std::size_t> target(0, config.n - 1);
  std::uniform_real_distribution<double> zdist(-(config.schedule.g_zeta + 1.0),
                                               config.schedule.g_zeta + 1.0);
  std::uniform_real_distribution<double> udist(
      0.0, 2.0 * std::pow(config.schedule.gamma_eps, config.schedule.gamma));

  Trajectory traj;
  std::size_t next_snap = 0;
  double t = 0.0;
  while (true) {
    const double t_event = t + interarrival(arrival_rng);
    while (next_snap < config.snapshot_times.size() &&
           config.snapshot_times[next_snap] <= std::min(t_event, config.t_end)) {
      traj.snapshots.push_back({config.snapshot_times[next_snap], ens.v, ens.running_max});
      ++next_snap;
    }
    if (t_event > config.t_end) break;
    t = t_event;
    const std::size_t i = target(target_rng);
    if (config.scheme == Scheme::kReal) {
      real_step(ens, t_event, i, config.schedule, partner_rng, angle_rng, thinning_rng);
    } else {
      EventDraw ev;
      ev.t_event = t_event;
      ev.particle = i;
      ev.partner = draw_partner(i, config.n, partner_rng);
      ev.z = zdist(angle_rng);
      ev.u = udist(thinning_rng);
      if (config.symmetric_pairs) {
        ens.time = ev.t_event;
        ++ens.arrivals;
        const double x = (ens.v[ev.particle] - ens.v[ev.partner]).norm();
        const double rate =
            std::pow(phi_eps(x, config.schedule.epsilon, config.schedule.gamma_eps),
                     config.schedule.gamma);
        if (ev.u <= rate)
          apply_jump(ens, ev.particle, ev.partner, ev.z, config.schedule, true);
      } else {
        fictive_step(ens, ev, config.schedule);
      }
    }
  }
  traj.arrivals = ens.arrivals;
  traj.accepted = ens.lineage.events;
  traj.lineage = ens.lineage;
  return traj;
}

MollifiedSample mollify(const Ensemble& ens, double t, const CutoffSchedule& schedule,
                        std::mt19937_64& rng) {
  if (!(t > 0.0)) throw std::invalid_argument("mollify: t must be positive");
  MollifiedSample out;
  out.f_samples.reserve(ens.size());
  out.g_weights.reserve(ens.size());
  const double sd = std::sqrt(t * schedule.molli_var_coeff);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t k = 0; k < ens.size(); ++k) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    out.f_samples.push_back({ens.v[k].x + sd * z1, ens.v[k].y + sd * z2});
    out.g_weights.push_back(confinement_weight(ens.running_max[k], schedule.gamma_eps));
  }
  return out;
}

double confinement_weight(double running_max, double gamma_eps) {
  if (running_max <= gamma_eps - 1.0) return 1.0;
  if (running_max >= gamma_eps) return 0.0;
  const double t = running_max - (gamma_eps - 1.0);
  return 1.0 - t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

std::vector<Trajectory> coupled_run(const SimConfig& config,
                                    const std::vector<CutoffSchedule>& schedules) {
  if (schedules.size() < 2)
    throw std::invalid_argument("coupled_run: need at least 2 schedules");
  for (const auto& s : schedules)
    if (s.eta0 != schedules.front().eta0)
      throw std::invalid_argument("coupled_run: schedules must share eta0");
  if (!(config.t_end > 0.0) || config.snapshot_times.empty())
    throw std::invalid_argument("coupled_run: bad time configuration");

  const std::size_t n_var = schedules.size();
  double g_max = 0.0, gamma_pow_max = 0.0;
  for (const auto& s : schedules) {
    g_max = std::max(g_max, s.g_zeta);
    gamma_pow_max = std::max(gamma_pow_max, std::pow(s.gamma_eps, s.gamma));
  }
  const double rate_max = 4.0 * (g_max + 1.0) * gamma_pow_max;

  std::vector<Ensemble> ens;
  ens.reserve(n_var);
  for (std::size_t s = 0; s < n_var; ++s)
    ens.push_back(init_ensemble(config.law, config.n, config.master_seed, config.replica));

  auto arrival_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kArrival);
  auto target_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kTarget);
  auto partner_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kPartner);
  auto angle_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kAngle);
  auto thinning_rng = rng::make_stream(config.master_seed, config.replica, rng::Stream::kThinning);

  std::exponential_distribution<double> interarrival(static_cast<double>(config.n) * rate_max);
  std::uniform_int_distribution<std::size_t> target(0, config.n - 1);
  std::uniform_real_distribution<double> zdist(-(g_max + 1.0), g_max + 1.0);
  std::uniform_real_distribution<double> udist(0.0, 2.0 * gamma_pow_max);

  std::vector<Trajectory> out(n_var);
  std::size_t next_snap = 0;
  double t = 0.0;
  while (true) {
    const double t_event = t + interarrival(arrival_rng);
    while (next_snap < config.snapshot_times.size() &&
           config.snapshot_times[next_snap] <= std::min(t_event, config.t_end)) {
      for (std::size_t s = 0; s < n_var; ++s)
        out[s].snapshots.push_back(
            {config.snapshot_times[next_snap], ens[s].v, ens[s].running_max});
      ++next_snap;
    }
    if (t_event > config.t_end) break;
    t = t_event;

    EventDraw ev;
    ev.t_event = t_event;
    ev.particle = target(target_rng);
    ev.partner = draw_partner(ev.particle, config.n, partner_rng);
    ev.z = zdist(angle_rng);
    ev.u = udist(thinning_rng);

    // A variant sees the event only if the marks land inside its own box;
    // inside-the-box marks are uniform on that box, so each variant's
    // marginal law is the plain fictive scheme at its own rate.
    for (std::size_t s = 0; s < n_var; ++s) {
      if (std::abs(ev.z) > schedules[s].g_zeta + 1.0) continue;
      if (ev.u > 2.0 * std::pow(schedules[s].gamma_eps, schedules[s].gamma)) continue;
      fictive_step(ens[s], ev, schedules[s]);
    }
  }
  for (std::size_t s = 0; s < n_var; ++s) {
    out[s].arrivals = ens[s].arrivals;
    out[s].accepted = ens[s].lineage.events;
    out[s].lineage = ens[s].lineage;
  }
  return out;
}

}  // namespace boltzlab::sim
