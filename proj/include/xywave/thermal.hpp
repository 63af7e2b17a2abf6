#ifndef XYWAVE_THERMAL_HPP
#define XYWAVE_THERMAL_HPP

#include <vector>

#include "xywave/analytic.hpp"
#include "xywave/quadrature.hpp"

namespace xyw {

// Equilibrium correlation kernel G_x of the chain in the thermodynamic
// limit: (1/pi) Int cos(kx)(1 + lambda cos k) tanh(E_k beta/2)/E_k dk
//      - (lambda gamma/pi) Int sin(kx) sin k tanh(E_k beta/2)/E_k dk.
double g_thermal(int x, const ModelParams& p, const Quadrature& q);

// Caches G_x on |x| <= max_offset at construction and derives the sigma-z
// magnetization and the sigma-sigma pair correlators from the cached values,
// so every derived quantity is built from one consistent set of integrals.
// Immutable after construction.
class ThermalCorrelators {
 public:
  ThermalCorrelators(const ModelParams& p, const Quadrature& q, int max_offset,
                     int sign_convention = +1);

  const ModelParams& params() const { return params_; }
  int max_offset() const { return max_offset_; }
  int sign_convention() const { return sign_; }

  // G_x for |x| <= max_offset; throws std::out_of_range beyond the cache.
  double g(int x) const;

  // <sigma_z> = sign_convention * G_0. The +1 default makes the lambda = 0
  // chain come out at tanh(beta/2) with the ground state polarized up, which
  // the brute-force oracle confirms.
  double magnetization_z() const;

  struct Pair {
    double xx, yy, zz;
  };
  // (<sx sx>, <sy sy>, <sz sz>) at offset x != 0:
  // (G_{-x}, G_x, <sigma_z>^2 - G_x G_{-x}).
  Pair pair_correlators(int x) const;

 private:
  ModelParams params_;
  int max_offset_;
  int sign_;
  std::vector<double> g_;  // index x + max_offset
};

}  // namespace xyw

#endif  // XYWAVE_THERMAL_HPP
