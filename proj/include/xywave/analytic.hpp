#ifndef XYWAVE_ANALYTIC_HPP
#define XYWAVE_ANALYTIC_HPP

#include <cmath>
#include <limits>

namespace xyw {

// Inverse temperature value selecting the T = 0 ensemble (tanh factor -> 1).
inline constexpr double kBetaInfinity = std::numeric_limits<double>::infinity();

// Physical parameters of the transverse-field XY chain: exchange coupling
// lambda >= 0, anisotropy gamma in [0, 1], inverse temperature beta > 0
// (kBetaInfinity selects the ground-state ensemble).
struct ModelParams {
  double lambda;
  double gamma;
  double beta;

  ModelParams(double lambda_, double gamma_, double beta_ = kBetaInfinity);

  bool zero_temperature() const { return std::isinf(beta); }
};

// Quasiparticle energy sqrt((gamma*lambda*sin k)^2 + (1 + lambda*cos k)^2)
// for k in [0, pi].
double dispersion(double k, const ModelParams& p);

// tanh(beta*energy/2) / energy, continued through energy = 0 with the limit
// beta/2 (series branch engages for beta*energy < 1e-4). For beta infinite
// this is 1/energy, taken as 0 at energy = 0 (the integrands using it vanish
// there up to a set of measure zero).
double thermal_weight(double energy, double beta);

// sin(energy*t) / energy, continued through energy = 0 with the limit t
// (series branch engages for energy*t < 1e-4).
double oscillatory_weight(double energy, double t);

}  // namespace xyw

#endif  // XYWAVE_ANALYTIC_HPP
