// Deterministic kernel mathematics for the 2D non-cutoff Boltzmann model
// with hard potentials: the angular cross-section b, its tail integral G and
// inverse g, the smooth angular cutoff, the mollified speed truncation, the
// deflection matrix and collision map, and the exponential moment weight.
//
// The concrete cross-section is b(theta) = |theta|^{-(1+nu)}, the canonical
// representative of the admissible class; it makes G and g closed-form and
// the inverse-transform sampling of angles exact.
#pragma once

#include <array>
#include <utility>

#include "boltzlab/vec2.hpp"

namespace boltzlab::kernel {

// Physical/kernel parameters.
//   nu     : angular singularity exponent, 0 < nu < 1/2
//   gamma  : potential exponent, 0 < gamma <= 1
//   lambda : exponential moment order of the initial datum, gamma < lambda < 2
//   lambda_prime : working moment order, 0 < lambda' < lambda
struct KernelParams {
  double nu = 0.25;
  double gamma = 1.0;
  double lambda_moment = 1.5;
  double lambda_prime = 1.0;

  // Throws std::domain_error if any constraint is violated.
  void validate() const;
};

// Regularization schedule for the cutoff jump SDE.  Built through make() so
// the derived quantities are always consistent with (epsilon, zeta, eta0).
struct CutoffSchedule {
  // copied from the kernel parameters at construction
  double nu = 0.0;
  double gamma = 0.0;
  // knobs
  double epsilon = 0.0;  // lower speed regularization scale
  double zeta = 0.0;     // angular cutoff
  double eta0 = 0.0;     // truncation growth exponent, in (1/lambda, 1/(gamma v nu))
  // derived
  double gamma_eps = 0.0;        // (ln 1/eps)^{eta0}
  double g_zeta = 0.0;           // G(zeta); z is drawn on [-(g_zeta+1), g_zeta+1]
  double rate = 0.0;             // per-particle jump rate 4(G(zeta)+1)*gamma_eps^gamma
  double molli_var_coeff = 0.0;  // zeta^{4+nu}; mollification variance is t * this

  // eta0 <= 0 picks the default midpoint of (1/lambda, 1/(gamma v nu)).
  static CutoffSchedule make(const KernelParams& params, double epsilon,
                             double zeta, double eta0 = 0.0);
};

// Midpoint of the admissible eta0 interval.  Throws if the interval is empty
// (requires lambda > gamma v nu).
double default_eta0(const KernelParams& params);

// Angular cross-section b(theta) = |theta|^{-(1+nu)} on [-pi/2,pi/2] \ {0}.
double b_density(double theta, double nu);

// Tail mass G(x) = integral of b over [x, pi/2], x in (0, pi/2].
double G_tail(double x, double nu);

// Inverse of G, extended oddly: g(-z) = -g(z); g(0) = pi/2.
double g_inverse(double z, double nu);

// Smooth version of 1_{|z| <= G(zeta)}: equals 1 for |z| <= G(zeta), 0 for
// |z| >= G(zeta)+1, quintic-smoothstep transition in between.  g_zeta is the
// precomputed G(zeta).
double smooth_angle_cutoff(double z, double g_zeta);

// Mollified truncation of the identity to [2 eps, Gamma_eps]:
//   = 2 eps        on [0, eps]
//   = x            on [3 eps, Gamma_eps - 1]
//   = Gamma_eps    on [Gamma_eps, inf)
// with monotone C^2 polynomial joins in between.  Requires the identity
// window to be non-empty (Gamma_eps - 1 > 3 eps).
double phi_eps(double x, double epsilon, double gamma_eps);

// Truncation level Gamma_eps = (ln 1/eps)^{eta0}.  Accepts eps in (0, 1/e];
// larger eps would give Gamma_eps < 1 and an empty truncation window.
double gamma_eps_of(double epsilon, double eta0);

// Deflection matrix A(theta) = (R_theta - I)/2, row-major.
std::array<double, 4> deflection_matrix(double theta);

// A(theta) * w without materializing the matrix.
Vec2 apply_deflection(double theta, Vec2 w);

// Post-collision velocities
//   v'  = (v+v*)/2 + R_theta (v-v*)/2,   v*' = (v+v*)/2 - R_theta (v-v*)/2.
std::pair<Vec2, Vec2> collide(Vec2 v, Vec2 v_star, double theta);

// Weight Phi_{lambda'}(v) = exp(rho(|v|^{lambda'})) with rho = 1 on [0,1],
// rho(u) = u on [2,inf) and a monotone cubic bridge on (1,2).
double weight_phi_lambda(Vec2 v, double lambda_prime);

// Error-equilibrating angular cutoff zeta_alpha(eps) = eps^{(1+gamma+alpha)/(1-nu)}.
double zeta_alpha(double epsilon, double gamma, double alpha, double nu);

}  // namespace boltzlab::kernel
