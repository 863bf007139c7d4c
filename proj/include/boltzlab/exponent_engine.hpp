// Closed-form regularity exponents, bootstrap sequences and regime
// classification for the hard-potential 2D model.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boltzlab/collision_kernel.hpp"

namespace boltzlab::exponents {

using kernel::KernelParams;

// Regimes ordered by strength of the conclusion they support.
//   kDensity : nu < gamma/(2 gamma + 1)   (a density exists)
//   kW1p     : nu < gamma/(3 gamma + 4)   (first-order Sobolev)
//   kFull    : nu < gamma/(4 gamma + 9)   (all L^p, Hoelder bounds)
enum class Regime { kNone, kDensity, kW1p, kFull };

std::string regime_name(Regime r);

// Auxiliary function phi(alpha) = (1-nu)(1+gamma+alpha)/(1+nu(gamma+alpha)) - 1;
// strictly increasing in alpha.
double phi_alpha(double alpha, const KernelParams& params);

// Unique fixed point of phi, in closed form:
//   alpha_* = (-(gamma+2) + sqrt((gamma+2)^2 + 4(gamma/nu - 2 gamma - 1)))/2.
// Absent when phi(0) < 0 (no positive fixed point); 0 exactly at the boundary.
std::optional<double> alpha_star(const KernelParams& params);

// Bootstrap sequences alpha_{k+1} = phi(alpha_k), kappa_{k+1} = kappa_k - 1 +
// 13(2+nu)(1+alpha_{k+1})/nu, from alpha_0 = kappa_0 = 0.  k_star is the first
// index with alpha_k >= 2 (present only when alpha_* > 2), and
// kappa_at_k_star_plus1 the matching kappa_{k_star+1}; both are computed past
// k_max if the stored sequences stop early.
struct BootstrapSequences {
  std::vector<double> alpha;
  std::vector<double> kappa;
  std::optional<int> k_star;
  std::optional<double> kappa_at_k_star_plus1;
};

// Requires phi(0) > 0 and k_max >= 1; stops early once consecutive alphas
// agree to 1e-13.
BootstrapSequences bootstrap_sequences(const KernelParams& params, int k_max = 64);

// Polynomial blow-up exponent
//   eta = 2(phi(2)-1)/(phi(2)-2) * (13(1+alpha_*)(2+nu)/nu - 1),
// defined only when phi(2) > 2.
std::optional<double> eta_exponent(const KernelParams& params);

// Tail exponent kappa = 13(2+nu)(1-nu)(1+gamma)/(nu(1+nu gamma)) - 1, defined
// in the density regime; equals kappa_1 of the bootstrap.
std::optional<double> kappa_exponent(const KernelParams& params);

// Sobolev integrability bounds and Hoelder order, defined in the full regime:
//   p_1 = 2(1+nu(gamma+2))/(1-gamma+11nu+5nu gamma)
//   p_2 = 2(1+nu(gamma+2))/(2-gamma+13nu+6nu gamma)
//   chi = 1 - 2/p_1
// and the identity p_q = 2/(q+2-phi(2)) holds.
struct SobolevOrders {
  double p1;
  double p2;
  double chi;
};
std::optional<SobolevOrders> sobolev_orders(const KernelParams& params);

// Strict-threshold classification; boundary inputs fall to the weaker regime.
Regime classify_regime(const KernelParams& params);

// 3D-significant parameter map nu = 2/(s-1), gamma = (s-5)/(s-1) for s > 5.
struct Dim3Map {
  double nu;
  double gamma;
  bool density_regime;  // s > 9
  bool full_regime;     // s > 16 + sqrt(193)
};
Dim3Map from_dimension3(double s);

// Everything above in one report, JSON-serializable through io.hpp.
struct RegimeReport {
  KernelParams params;
  double phi0 = 0.0;
  double phi2 = 0.0;
  std::optional<double> alpha_star;
  std::vector<double> alpha_seq;
  std::vector<double> kappa_seq;
  std::optional<int> k_star;
  std::optional<double> eta;
  std::optional<double> kappa;
  std::optional<double> p1;
  std::optional<double> p2;
  std::optional<double> chi;
  Regime regime = Regime::kNone;
};

RegimeReport build_report(const KernelParams& params, int k_max = 64);

}  // namespace boltzlab::exponents
