#ifndef XYWAVE_ORACLE_HPP
#define XYWAVE_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "xywave/analytic.hpp"
#include "xywave/entanglement.hpp"

namespace xyw {

// Dense Hamiltonian of the n-site periodic chain in the computational basis
// (bit i set = spin up at site i):
//   H = -sum_i [ (lambda/4)((1+gamma) X_i X_{i+1} + (1-gamma) Y_i Y_{i+1})
//                + (1/2) Z_i ].
// The quarter-scale exchange and half-scale field make the quasiparticle
// energies coincide with dispersion(); at lambda = 0 the magnetization is
// tanh(beta/2), matching the thermal integrals with no extra factor.
Eigen::MatrixXd build_xy_hamiltonian(int n, const ModelParams& p);

// Brute-force reference for chains up to n = 14 (default tests use 12):
// full spectral decomposition once at construction, everything else derived
// from it. Immutable and safe to share after construction.
class OracleChain {
 public:
  OracleChain(int n, const ModelParams& p);

  int site_count() const { return n_; }
  const ModelParams& params() const { return params_; }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  const Eigen::MatrixXd& eigenvectors() const { return evecs_; }

  // Tr(exp(-beta H) A)/Z for a Pauli string, one of I/X/Y/Z per site
  // (pauli[i] acts on site i). beta may be kBetaInfinity.
  double thermal_expectation(double beta, std::string_view pauli) const;

  // <sigma_z^m(t)>/2 after a sigma_z measurement at site l:
  // Tr(rho P A(t) P)/Tr(P rho P) when selective, the projector-weighted
  // two-branch sum otherwise. A(t) is evolved spectrally.
  double conditional_dynamics(double beta, int l, int m, double t,
                              bool selective) const;

  // Reduced two-site density matrix of the thermal state.
  TwoSiteDensity partial_trace_two_site(double beta, int i, int j) const;

  // Reduced two-site density matrix of a pure 2^n state vector.
  static TwoSiteDensity partial_trace_two_site(const Eigen::VectorXcd& state,
                                               int n, int i, int j);

 private:
  struct Conditioned;
  const Conditioned& conditioned(double beta, int l, int m) const;
  Eigen::VectorXd thermal_weights(double beta) const;  // normalized, sums to 1

  int n_;
  ModelParams params_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<double, int, int>, std::shared_ptr<Conditioned>> cache_;
};

// exp(+i t H_ring) applied to the basis vector at site m, where H_ring is
// the n x n circulant with 1 on the diagonal and lambda/2 on the hopping
// off-diagonals; evaluated exactly through the Fourier eigenbasis. Amplitude
// l carries the phase e^{it} i^{m-l} J_{m-l}(lambda t) in the large-n limit.
// Throws if the ballistic front would wrap (lambda t >= n/2 - 10).
std::vector<std::complex<double>> single_excitation_evolution(long n, double lambda,
                                                              long m, double t);

}  // namespace xyw

#endif  // XYWAVE_ORACLE_HPP
