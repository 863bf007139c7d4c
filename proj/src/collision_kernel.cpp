#include "boltzlab/collision_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boltzlab::kernel {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Quintic smoothstep: 0 -> 1 on [0,1] with zero first and second derivatives
// at both ends.
double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

}  // namespace

void KernelParams::validate() const {
  if (!(nu > 0.0 && nu < 0.5))
    throw std::domain_error("nu must satisfy 0 < nu < 1/2, got " + std::to_string(nu));
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must satisfy 0 < gamma <= 1, got " + std::to_string(gamma));
  if (!(lambda_moment > gamma && lambda_moment < 2.0))
    throw std::domain_error("lambda must satisfy gamma < lambda < 2, got " +
                            std::to_string(lambda_moment));
  if (!(lambda_prime > 0.0 && lambda_prime < lambda_moment))
    throw std::domain_error("lambda' must satisfy 0 < lambda' < lambda, got " +
                            std::to_string(lambda_prime));
}

double default_eta0(const KernelParams& params) {
  const double lo = 1.0 / params.lambda_moment;
  const double hi = 1.0 / std::max(params.gamma, params.nu);
  if (!(lo < hi))
    throw std::domain_error("eta0 interval (1/lambda, 1/(gamma v nu)) is empty");
  return 0.5 * (lo + hi);
}

CutoffSchedule CutoffSchedule::make(const KernelParams& params, double epsilon,
                                    double zeta, double eta0) {
  params.validate();
  if (eta0 <= 0.0) eta0 = default_eta0(params);
  const double lo = 1.0 / params.lambda_moment;
  const double hi = 1.0 / std::max(params.gamma, params.nu);
  if (!(eta0 > lo && eta0 < hi))
    throw std::domain_error("eta0 must lie in (1/lambda, 1/(gamma v nu)) = (" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "), got " +
                            std::to_string(eta0));
  if (!(zeta > 0.0 && zeta < kHalfPi))
    throw std::domain_error("zeta must lie in (0, pi/2), got " + std::to_string(zeta));

  CutoffSchedule s;
  s.nu = params.nu;
  s.gamma = params.gamma;
  s.epsilon = epsilon;
  s.zeta = zeta;
  s.eta0 = eta0;
  s.gamma_eps = gamma_eps_of(epsilon, eta0);
  if (!(s.gamma_eps - 1.0 > 3.0 * epsilon))
    throw std::domain_error("truncation window empty: Gamma_eps - 1 <= 3 eps (Gamma_eps = " +
                            std::to_string(s.gamma_eps) + ", eps = " + std::to_string(epsilon) +
                            ")");
  s.g_zeta = G_tail(zeta, params.nu);
  s.rate = 4.0 * (s.g_zeta + 1.0) * std::pow(s.gamma_eps, params.gamma);
  s.molli_var_coeff = std::pow(zeta, 4.0 + params.nu);
  return s;
}

double b_density(double theta, double nu) {
  if (!(std::abs(theta) <= kHalfPi) || theta == 0.0)
    throw std::domain_error("b_density: theta must lie in [-pi/2, pi/2] \\ {0}");
  return std::pow(std::abs(theta), -(1.0 + nu));
}

double G_tail(double x, double nu) {
  if (!(x > 0.0 && x <= kHalfPi))
    throw std::domain_error("G_tail: x must lie in (0, pi/2]");
  return (std::pow(x, -nu) - std::pow(kHalfPi, -nu)) / nu;
}

double g_inverse(double z, double nu) {
  if (!std::isfinite(z)) throw std::domain_error("g_inverse: non-finite z");
  if (z == 0.0) return kHalfPi;
  const double a = std::abs(z);
  const double angle = std::pow(nu * a + std::pow(kHalfPi, -nu), -1.0 / nu);
  return z > 0.0 ? angle : -angle;
}

double smooth_angle_cutoff(double z, double g_zeta) {
  const double a = std::abs(z);
  if (a <= g_zeta) return 1.0;
  if (a >= g_zeta + 1.0) return 0.0;
  return 1.0 - smoothstep5(a - g_zeta);
}

double phi_eps(double x, double epsilon, double gamma_eps) {
  if (!(gamma_eps - 1.0 > 3.0 * epsilon))
    throw std::domain_error("phi_eps: truncation window empty (Gamma_eps - 1 <= 3 eps)");
  if (x <= epsilon) return 2.0 * epsilon;
  if (x < 3.0 * epsilon) {
    // C^2 join from the plateau 2 eps (slope 0) to the identity at 3 eps
    // (slope 1): phi = 2 eps + 2 eps (t^3 - t^4/2), t in [0,1].
    const double t = (x - epsilon) / (2.0 * epsilon);
    return 2.0 * epsilon * (1.0 + t * t * t * (1.0 - 0.5 * t));
  }
  if (x <= gamma_eps - 1.0) return x;
  if (x < gamma_eps) {
    // C^2 join from the identity (slope 1) to the plateau Gamma_eps (slope 0):
    // phi = Gamma_eps - 1 + t + 4t^3 - 7t^4 + 3t^5, t in [0,1].
    const double t = x - (gamma_eps - 1.0);
    return gamma_eps - 1.0 + t + t * t * t * (4.0 + t * (-7.0 + 3.0 * t));
  }
  return gamma_eps;
}

double gamma_eps_of(double epsilon, double eta0) {
  if (!(epsilon > 0.0))
    throw std::domain_error("gamma_eps_of: epsilon must be positive");
  const double l = std::log(1.0 / epsilon);
  if (!(l >= 1.0))
    throw std::domain_error("gamma_eps_of: epsilon must be <= 1/e so that Gamma_eps >= 1");
  return std::pow(l, eta0);
}

std::array<double, 4> deflection_matrix(double theta) {
  const double c = 0.5 * (std::cos(theta) - 1.0);
  const double s = 0.5 * std::sin(theta);
  return {c, -s, s, c};
}

Vec2 apply_deflection(double theta, Vec2 w) {
  const double c = 0.5 * (std::cos(theta) - 1.0);
  const double s = 0.5 * std::sin(theta);
  return {c * w.x - s * w.y, s * w.x + c * w.y};
}

std::pair<Vec2, Vec2> collide(Vec2 v, Vec2 v_star, double theta) {
  const Vec2 m = 0.5 * (v + v_star);
  const Vec2 h = 0.5 * (v - v_star);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec2 rh{c * h.x - s * h.y, s * h.x + c * h.y};
  return {m + rh, m - rh};
}

double weight_phi_lambda(Vec2 v, double lambda_prime) {
  if (!(lambda_prime > 0.0 && lambda_prime < 2.0))
    throw std::domain_error("weight_phi_lambda: lambda' must lie in (0, 2)");
  const double u = std::pow(v.norm(), lambda_prime);
  double rho;
  if (u <= 1.0) {
    rho = 1.0;
  } else if (u >= 2.0) {
    rho = u;
  } else {
    // cubic bridge: rho(1)=1, rho(2)=2, zero slope at both ends
    const double t = u - 1.0;
    rho = 1.0 + t * t * (3.0 - 2.0 * t);
  }
  return std::exp(rho);
}

double zeta_alpha(double epsilon, double gamma, double alpha, double nu) {
  return std::pow(epsilon, (1.0 + gamma + alpha) / (1.0 - nu));
}

}  // namespace boltzlab::kernel
