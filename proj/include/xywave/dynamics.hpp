#ifndef XYWAVE_DYNAMICS_HPP
#define XYWAVE_DYNAMICS_HPP

#include "xywave/analytic.hpp"
#include "xywave/quadrature.hpp"

namespace xyw {

// Propagation kernels at site offset x and time t. The paper-level kernel
// G_{ml} is purely imaginary; k_hat stores its real magnitude (G = i*k_hat).
struct TimeKernels {
  double phi;
  double k_hat;
};
TimeKernels time_kernels(int x, double t, const ModelParams& p, const Quadrature& q);

// The four post-measurement scalars of the isotropic chain (gamma = 0
// required). beta_hat_prime_x likewise stores the real magnitude of the
// purely imaginary printed integral.
struct AppendixIntegrals {
  double alpha;
  double beta_x;
  double alpha_prime;
  double beta_hat_prime_x;
};
AppendixIntegrals appendix_integrals(int x, double t, const ModelParams& p,
                                     const Quadrature& q);

// Everything magnetization_selective / _nonselective consume at one (x, t).
struct DynamicsKernels {
  int x;
  double t;
  double beta;
  double phi;
  double k_hat;
  double alpha;
  double beta_x;
  double alpha_prime;
  double beta_hat_prime_x;
};
DynamicsKernels dynamics_kernels(int x, double t, const ModelParams& p,
                                 const Quadrature& q);

// <sigma_z^m(t)>/2 at offset x = m - l after a projective sigma_z
// measurement at site l with the up outcome kept (gamma = 0 only).
double magnetization_selective(int x, double t, const ModelParams& p,
                               const Quadrature& q);

// Same observable when the measurement outcome is discarded.
double magnetization_nonselective(int x, double t, const ModelParams& p,
                                  const Quadrature& q);

}  // namespace xyw

#endif  // XYWAVE_DYNAMICS_HPP
