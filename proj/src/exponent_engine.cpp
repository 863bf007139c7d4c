#include "boltzlab/exponent_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace boltzlab::exponents {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kNone: return "NONE";
    case Regime::kDensity: return "DENSITY";
    case Regime::kW1p: return "W1P";
    case Regime::kFull: return "FULL";
  }
  return "NONE";
}

double phi_alpha(double alpha, const KernelParams& params) {
  if (!(alpha >= 0.0)) throw std::domain_error("phi_alpha: alpha must be >= 0");
  const double nu = params.nu;
  const double gamma = params.gamma;
  return (1.0 - nu) * (1.0 + gamma + alpha) / (1.0 + nu * (gamma + alpha)) - 1.0;
}

std::optional<double> alpha_star(const KernelParams& params) {
  if (phi_alpha(0.0, params) < 0.0) return std::nullopt;
  const double g = params.gamma;
  const double disc = (g + 2.0) * (g + 2.0) + 4.0 * (g / params.nu - 2.0 * g - 1.0);
  return 0.5 * (-(g + 2.0) + std::sqrt(disc));
}

BootstrapSequences bootstrap_sequences(const KernelParams& params, int k_max) {
  if (k_max < 1) throw std::domain_error("bootstrap_sequences: k_max must be >= 1");
  if (!(phi_alpha(0.0, params) > 0.0))
    throw std::domain_error("bootstrap_sequences: requires phi(0) > 0, i.e. nu < gamma/(2 gamma + 1)");

  const double nu = params.nu;
  BootstrapSequences seq;
  seq.alpha.push_back(0.0);
  seq.kappa.push_back(0.0);
  for (int k = 0; k < k_max; ++k) {
    const double a_next = phi_alpha(seq.alpha.back(), params);
    const double k_next =
        seq.kappa.back() - 1.0 + 13.0 * (2.0 + nu) * (1.0 + a_next) / nu;
    seq.alpha.push_back(a_next);
    seq.kappa.push_back(k_next);
    if (std::abs(a_next - seq.alpha[seq.alpha.size() - 2]) < 1e-13) break;
  }

  // k_star only exists when the fixed point exceeds 2; chase it past k_max if
  // the stored sequence stops short (the crossing index can be large near the
  // full-regime boundary).
  const auto a_star = alpha_star(params);
  if (a_star && *a_star > 2.0) {
    double a = 0.0, kap = 0.0;
    constexpr int kCap = 1'000'000;
    for (int k = 0; k <= kCap; ++k) {
      if (a >= 2.0) {
        seq.k_star = k;
        seq.kappa_at_k_star_plus1 =
            kap - 1.0 + 13.0 * (2.0 + nu) * (1.0 + phi_alpha(a, params)) / nu;
        break;
      }
      const double a_next = phi_alpha(a, params);
      kap = kap - 1.0 + 13.0 * (2.0 + nu) * (1.0 + a_next) / nu;
      a = a_next;
    }
  }
  return seq;
}

std::optional<double> eta_exponent(const KernelParams& params) {
  const double phi2 = phi_alpha(2.0, params);
  if (!(phi2 > 2.0)) return std::nullopt;
  const auto a_star = alpha_star(params);
  if (!a_star) return std::nullopt;
  const double nu = params.nu;
  return 2.0 * (phi2 - 1.0) / (phi2 - 2.0) *
         (13.0 * (1.0 + *a_star) * (2.0 + nu) / nu - 1.0);
}

std::optional<double> kappa_exponent(const KernelParams& params) {
  if (!(phi_alpha(0.0, params) > 0.0)) return std::nullopt;
  const double nu = params.nu;
  const double g = params.gamma;
  return 13.0 * (2.0 + nu) * (1.0 - nu) * (1.0 + g) / (nu * (1.0 + nu * g)) - 1.0;
}

std::optional<SobolevOrders> sobolev_orders(const KernelParams& params) {
  const double nu = params.nu;
  const double g = params.gamma;
  if (!(nu < g / (4.0 * g + 9.0))) return std::nullopt;
  SobolevOrders s;
  const double num = 2.0 * (1.0 + nu * (g + 2.0));
  s.p1 = num / (1.0 - g + 11.0 * nu + 5.0 * nu * g);
  s.p2 = num / (2.0 - g + 13.0 * nu + 6.0 * nu * g);
  s.chi = 1.0 - 2.0 / s.p1;
  return s;
}

Regime classify_regime(const KernelParams& params) {
  const double nu = params.nu;
  const double g = params.gamma;
  if (nu < g / (4.0 * g + 9.0)) return Regime::kFull;
  if (nu < g / (3.0 * g + 4.0)) return Regime::kW1p;
  if (nu < g / (2.0 * g + 1.0)) return Regime::kDensity;
  return Regime::kNone;
}

Dim3Map from_dimension3(double s) {
  if (!(s > 5.0)) throw std::domain_error("from_dimension3: requires s > 5 (hard potential)");
  Dim3Map m;
  m.nu = 2.0 / (s - 1.0);
  m.gamma = (s - 5.0) / (s - 1.0);
  m.density_regime = m.nu < m.gamma / (2.0 * m.gamma + 1.0);
  m.full_regime = m.nu < m.gamma / (4.0 * m.gamma + 9.0);
  return m;
}

RegimeReport build_report(const KernelParams& params, int k_max) {
  params.validate();
  RegimeReport r;
  r.params = params;
  r.phi0 = phi_alpha(0.0, params);
  r.phi2 = phi_alpha(2.0, params);
  r.alpha_star = alpha_star(params);
  r.regime = classify_regime(params);
  if (r.phi0 > 0.0) {
    auto seq = bootstrap_sequences(params, k_max);
    r.alpha_seq = std::move(seq.alpha);
    r.kappa_seq = std::move(seq.kappa);
    r.k_star = seq.k_star;
    r.kappa = kappa_exponent(params);
  }
  r.eta = eta_exponent(params);
  if (auto s = sobolev_orders(params)) {
    r.p1 = s->p1;
    r.p2 = s->p2;
    r.chi = s->chi;
  }
  return r;
}

}  // namespace boltzlab::exponents
