#include "xywave/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyw {

ModelParams::ModelParams(double lambda_, double gamma_, double beta_)
    : lambda(lambda_), gamma(gamma_), beta(beta_) {
  if (!(lambda >= 0.0) || std::isinf(lambda))
    throw std::invalid_argument("ModelParams: lambda must be finite and >= 0");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("ModelParams: gamma must be in [0, 1]");
  if (!(beta > 0.0))  // also rejects NaN; +inf selects T = 0
    throw std::invalid_argument("ModelParams: beta must be > 0 (inf for T = 0)");
}

double dispersion(double k, const ModelParams& p) {
  if (!(k >= 0.0 && k <= std::numbers::pi))
    throw std::invalid_argument("dispersion: k must lie in [0, pi]");
  const double a = p.gamma * p.lambda * std::sin(k);
  const double b = 1.0 + p.lambda * std::cos(k);
  return std::hypot(a, b);
}

double thermal_weight(double energy, double beta) {
  if (std::isinf(beta)) return energy > 0.0 ? 1.0 / energy : 0.0;
  const double y = 0.5 * beta * energy;
  if (beta * energy < 1e-4) {
    // tanh(y)/y = 1 - y^2/3 + 2 y^4/15 + O(y^6)
    const double y2 = y * y;
    return 0.5 * beta * (1.0 - y2 / 3.0 + 2.0 * y2 * y2 / 15.0);
  }
  return std::tanh(y) / energy;
}

double oscillatory_weight(double energy, double t) {
  const double y = energy * t;
  if (y < 1e-4) {
    // sin(y)/y = 1 - y^2/6 + y^4/120 + O(y^6)
    const double y2 = y * y;
    return t * (1.0 - y2 / 6.0 + y2 * y2 / 120.0);
  }
  return std::sin(y) / energy;
}

}  // namespace xyw
