#include "xywave/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xywave/thermal.hpp"

namespace xyw {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sign_breakpoints(const ModelParams& p) {
  std::vector<double> bps;
  if (p.gamma == 0.0 && p.lambda > 1.0) bps.push_back(std::acos(-1.0 / p.lambda));
  return bps;
}

void require_isotropic(const ModelParams& p, const char* who) {
  if (p.gamma != 0.0)
    throw std::domain_error(std::string(who) + ": defined for gamma = 0 only");
}

}  // namespace

TimeKernels time_kernels(int x, double t, const ModelParams& p, const Quadrature& q) {
  if (!(t >= 0.0)) throw std::invalid_argument("time_kernels: t must be >= 0");
  const double hint = std::abs(x) + p.lambda * t * (1.0 + p.gamma);
  const double phi = integrate(
                         [&](double k) {
                           return std::cos(k * x) * std::cos(dispersion(k, p) * t);
                         },
                         q, hint) /
                     kPi;
  double k_hat = integrate(
                     [&](double k) {
                       return std::cos(k * x) * (1.0 + p.lambda * std::cos(k)) *
                              oscillatory_weight(dispersion(k, p), t);
                     },
                     q, hint) /
                 kPi;
  if (p.gamma != 0.0) {
    k_hat -= p.lambda * p.gamma *
             integrate(
                 [&](double k) {
                   return std::sin(k * x) * std::sin(k) *
                          oscillatory_weight(dispersion(k, p), t);
                 },
                 q, hint) /
             kPi;
  }
  return TimeKernels{phi, k_hat};
}

AppendixIntegrals appendix_integrals(int x, double t, const ModelParams& p,
                                     const Quadrature& q) {
  require_isotropic(p, "appendix_integrals");
  if (!(t >= 0.0)) throw std::invalid_argument("appendix_integrals: t must be >= 0");
  const auto bps = sign_breakpoints(p);
  const double hint2t = 2.0 * p.lambda * t;
  const double hintxt = std::abs(x) + p.lambda * t;

  const double alpha = integrate(
                           [&](double k) {
                             const double e = dispersion(k, p);
                             const double c = std::cos(e * t);
                             return (1.0 + p.lambda * std::cos(k)) *
                                    thermal_weight(e, p.beta) * c * c;
                           },
                           q, hint2t, bps) /
                       kPi;
  const double beta_x = integrate(
                            [&](double k) {
                              const double e = dispersion(k, p);
                              return std::cos(k * x) * (1.0 + p.lambda * std::cos(k)) *
                                     thermal_weight(e, p.beta) * std::cos(e * t);
                            },
                            q, hintxt, bps) /
                        kPi;
  const double alpha_prime =
      -integrate(
          [&](double k) {
            const double e = dispersion(k, p);
            const double u = 1.0 + p.lambda * std::cos(k);
            const double ow = oscillatory_weight(e, t);
            return u * u * u * thermal_weight(e, p.beta) * ow * ow;
          },
          q, hint2t, bps) /
      kPi;
  const double beta_hat_prime =
      integrate(
          [&](double k) {
            const double e = dispersion(k, p);
            const double u = 1.0 + p.lambda * std::cos(k);
            return std::cos(k * x) * u * u * thermal_weight(e, p.beta) *
                   oscillatory_weight(e, t);
          },
          q, hintxt, bps) /
      kPi;
  return AppendixIntegrals{alpha, beta_x, alpha_prime, beta_hat_prime};
}

DynamicsKernels dynamics_kernels(int x, double t, const ModelParams& p,
                                 const Quadrature& q) {
  require_isotropic(p, "dynamics_kernels");
  const TimeKernels tk = time_kernels(x, t, p, q);
  const AppendixIntegrals ap = appendix_integrals(x, t, p, q);
  return DynamicsKernels{x,        t,         p.beta,         tk.phi,
                         tk.k_hat, ap.alpha,  ap.beta_x,      ap.alpha_prime,
                         ap.beta_hat_prime_x};
}

// The printed closed forms carry G_{ml} = i k_hat and beta'_{ml} = i bhp, so
// every squared or mixed term enters with the sign flipped:
//   G^2 -> -k_hat^2,  beta'^2 -> -bhp^2,  G beta' -> -k_hat bhp.
double magnetization_selective(int x, double t, const ModelParams& p,
                               const Quadrature& q) {
  require_isotropic(p, "magnetization_selective");
  const DynamicsKernels k = dynamics_kernels(x, t, p, q);
  const double g0 = g_thermal(0, p, q);
  const double propagated = k.phi * k.phi + k.k_hat * k.k_hat;
  const double numerator =
      g0 + (2.0 * g0 + 1.0) * (2.0 * propagated + k.alpha - k.alpha_prime) +
      4.0 * (-k.k_hat * k.beta_hat_prime_x - k.phi * k.beta_x) +
      2.0 * (-k.beta_hat_prime_x * k.beta_hat_prime_x - k.beta_x * k.beta_x);
  return numerator / (4.0 * (g0 + 1.0));
}

double magnetization_nonselective(int x, double t, const ModelParams& p,
                                  const Quadrature& q) {
  require_isotropic(p, "magnetization_nonselective");
  const DynamicsKernels k = dynamics_kernels(x, t, p, q);
  const double g0 = g_thermal(0, p, q);
  const double propagated = k.phi * k.phi + k.k_hat * k.k_hat;
  return 0.25 * (g0 + 4.0 * g0 * propagated + (k.alpha - k.alpha_prime) +
                 4.0 * (-k.k_hat * k.beta_hat_prime_x - k.phi * k.beta_x));
}

}  // namespace xyw
