#ifndef XYWAVE_ZEROTEMP_HPP
#define XYWAVE_ZEROTEMP_HPP

#include <Eigen/Dense>
#include <vector>

#include "xywave/entanglement.hpp"

namespace xyw {

// Post-measurement single-excitation wave at T = 0, lambda < 1:
// w_l(t) = J_{m-l}(lambda t) on a window sized so the captured probability
// sum w^2 reaches min_mass.
class WaveProfile {
 public:
  WaveProfile(long m, double t, double lambda, double min_mass = 1.0 - 1e-10);

  long measured_site() const { return m_; }
  double time() const { return t_; }
  double coupling() const { return lambda_; }
  long site_lo() const { return lo_; }
  long site_hi() const { return lo_ + (long)w_.size() - 1; }
  double captured_mass() const { return mass_; }

  // w_l; zero outside the window.
  double amplitude(long site) const;

 private:
  long m_;
  double t_, lambda_, mass_;
  long lo_;
  std::vector<double> w_;
};

// The two-spin density matrix of the post-measurement state at sites with
// amplitudes (w_i, w_j); requires w_i^2 + w_j^2 <= 1.
TwoSiteDensity two_site_state(double w_i, double w_j);

// Site magnetization <sigma_z>/2 = (w^2 - 1)/2 and the single-site entropy
// of rho_i = 1/2 [[w^2, w], [w, 2 - w^2]], base 2.
struct SiteObservables {
  double magnetization_z_half;
  double entropy;
};
SiteObservables site_observables(double w_i);

// Concurrence between the measured site and a site pair: |w_i w_j|.
double pair_concurrence(double w_i, double w_j);

// Transmission fidelity (1 + w_i)/2 of the measured state at site i.
double fidelity(double w_i);

// Amplitude damping channel with Kraus pair M0 = diag(w, 1),
// M1 = [[0, 0], [sqrt(1 - w^2), 0]].
Eigen::Matrix2cd apply_damping_channel(const Eigen::Matrix2cd& rho, double w_i);

}  // namespace xyw

#endif  // XYWAVE_ZEROTEMP_HPP
