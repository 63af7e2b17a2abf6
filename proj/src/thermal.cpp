#include "xywave/thermal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyw {

namespace {

// For gamma = 0 and lambda > 1 the factor (1 + lambda cos k)/E_k changes sign
// at k_c = arccos(-1/lambda); splitting there keeps each piece smooth even
// when beta is large enough to turn the tanh into a wall.
std::vector<double> thermal_breakpoints(const ModelParams& p) {
  std::vector<double> bps;
  if (p.gamma == 0.0 && p.lambda > 1.0) bps.push_back(std::acos(-1.0 / p.lambda));
  return bps;
}

}  // namespace

double g_thermal(int x, const ModelParams& p, const Quadrature& q) {
  const auto bps = thermal_breakpoints(p);
  const auto f = [&](double k) {
    const double w = thermal_weight(dispersion(k, p), p.beta);
    double v = std::cos(k * x) * (1.0 + p.lambda * std::cos(k)) * w;
    if (p.gamma != 0.0)
      v -= p.lambda * p.gamma * std::sin(k * x) * std::sin(k) * w;
    return v;
  };
  return integrate(f, q, std::abs(x), bps) / std::numbers::pi;
}

ThermalCorrelators::ThermalCorrelators(const ModelParams& p, const Quadrature& q,
                                       int max_offset, int sign_convention)
    : params_(p), max_offset_(max_offset), sign_(sign_convention) {
  if (max_offset < 0)
    throw std::invalid_argument("ThermalCorrelators: max_offset must be >= 0");
  if (sign_convention != 1 && sign_convention != -1)
    throw std::invalid_argument("ThermalCorrelators: sign_convention must be +1 or -1");
  g_.resize(2 * max_offset + 1);
  for (int x = -max_offset; x <= max_offset; ++x)
    g_[x + max_offset] = g_thermal(x, p, q);
}

double ThermalCorrelators::g(int x) const {
  if (std::abs(x) > max_offset_)
    throw std::out_of_range("ThermalCorrelators: offset outside cached range");
  return g_[x + max_offset_];
}

double ThermalCorrelators::magnetization_z() const { return sign_ * g(0); }

ThermalCorrelators::Pair ThermalCorrelators::pair_correlators(int x) const {
  if (x == 0)
    throw std::invalid_argument("pair_correlators: offset must be nonzero");
  const double mz = magnetization_z();
  return Pair{g(-x), g(x), mz * mz - g(x) * g(-x)};
}

}  // namespace xyw
