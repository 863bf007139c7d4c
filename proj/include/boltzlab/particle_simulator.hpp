// N-particle Nanbu simulation of the cutoff jump SDE.
//
// The mean-field law is closed with the empirical measure: candidate events
// arrive on a global exponential clock of rate N * lambda_rate, pick a
// particle and a partner uniformly, and are thinned against the mollified
// rate phi_eps^gamma.  Two representations of the same law are implemented:
// the fictive-shock scheme (uniform marks, explicit acceptance variable) and
// the real-shock scheme (position-dependent jump law realized by
// acceptance-rejection, rejection = cemetery).  Only the chosen particle
// moves per event; a symmetric pair-update variant sits behind a flag.
#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "boltzlab/collision_kernel.hpp"
#include "boltzlab/rng.hpp"
#include "boltzlab/vec2.hpp"

namespace boltzlab::sim {

using kernel::CutoffSchedule;
using kernel::KernelParams;

// ---- initial laws ----------------------------------------------------------

struct DiracLaw { Vec2 v0; };
struct TwoPointLaw { Vec2 a; Vec2 b; double weight_a = 0.5; };
struct GaussianLaw { Vec2 mean; double sxx = 1.0, sxy = 0.0, syy = 1.0; };
struct UniformDiscLaw { double radius = 1.0; Vec2 center{}; };

using SimpleLaw = std::variant<DiracLaw, TwoPointLaw, GaussianLaw, UniformDiscLaw>;

struct MixtureLaw {
  std::vector<double> weights;  // nonneg, normalized at sampling time
  std::vector<SimpleLaw> components;
};

using InitialLaw = std::variant<DiracLaw, TwoPointLaw, GaussianLaw, UniformDiscLaw, MixtureLaw>;

// ---- state -----------------------------------------------------------------

struct SeedLineage {
  std::uint64_t master = 0;
  std::uint64_t replica = 0;
  std::uint64_t events = 0;  // accepted-jump counter
};

struct Ensemble {
  std::vector<Vec2> v;
  std::vector<double> running_max;  // sup over the trajectory of |V|
  double time = 0.0;
  SeedLineage lineage;
  std::uint64_t arrivals = 0;

  std::size_t size() const { return v.size(); }
};

// One fictive-shock candidate event.
struct EventDraw {
  double t_event = 0.0;
  std::size_t particle = 0;
  std::size_t partner = 0;
  double z = 0.0;  // uniform on [-(G(zeta)+1), G(zeta)+1]
  double u = 0.0;  // uniform on [0, 2 Gamma_eps^gamma]
};

struct MollifiedSample {
  std::vector<Vec2> f_samples;
  std::vector<double> g_weights;
};

// ---- simulation ------------------------------------------------------------

enum class Scheme { kFictive, kReal };

struct SimConfig {
  KernelParams kernel;
  CutoffSchedule schedule;
  InitialLaw law = GaussianLaw{};
  std::size_t n = 1000;
  double t_end = 1.0;
  std::vector<double> snapshot_times;  // strictly increasing, in (0, t_end]
  Scheme scheme = Scheme::kFictive;
  bool symmetric_pairs = false;  // Bird-style variant: both particles move, half rate
  std::uint64_t master_seed = 1;
  std::uint64_t replica = 0;
};

struct Snapshot {
  double t = 0.0;
  std::vector<Vec2> v;
  std::vector<double> running_max;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::uint64_t arrivals = 0;
  std::uint64_t accepted = 0;
  SeedLineage lineage;
};

// N i.i.d. draws from the law, reproducible from (seed, replica).
Ensemble init_ensemble(const InitialLaw& law, std::size_t n, std::uint64_t master_seed,
                       std::uint64_t replica = 0);

// Applies one fictive-shock candidate: jump iff u <= phi_eps^gamma(|V_i - V_j|),
// scaled by the smooth angular cutoff; the partner never moves.
void fictive_step(Ensemble& ens, const EventDraw& event, const CutoffSchedule& schedule);

// Applies one real-shock arrival: partner and mixture component are sampled by
// acceptance-rejection (cemetery = rejection, no jump), the angular mark only
// on acceptance.
void real_step(Ensemble& ens, double t_arrival, std::size_t particle,
               const CutoffSchedule& schedule, std::mt19937_64& partner_rng,
               std::mt19937_64& angle_rng, std::mt19937_64& thinning_rng);

// Event-driven run with snapshots at the requested times.
Trajectory run(const SimConfig& config);

// Gaussian mollification F = V + sqrt(t * zeta^{4+nu}) Z plus confinement
// weights from the running maxima.
MollifiedSample mollify(const Ensemble& ens, double t, const CutoffSchedule& schedule,
                        std::mt19937_64& rng);

// Smooth surrogate for 1_{running_max <= Gamma_eps}: 1 below Gamma_eps - 1,
// 0 above Gamma_eps.
double confinement_weight(double running_max, double gamma_eps);

// Runs every schedule against one common event stream drawn at the maximal
// rate (common random numbers); all schedules must share eta0.  Snapshots are
// aligned across variants.
std::vector<Trajectory> coupled_run(const SimConfig& config,
                                    const std::vector<CutoffSchedule>& schedules);

}  // namespace boltzlab::sim
