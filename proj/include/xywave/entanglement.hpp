#ifndef XYWAVE_ENTANGLEMENT_HPP
#define XYWAVE_ENTANGLEMENT_HPP

#include <Eigen/Dense>

namespace xyw {

// Two-qubit density matrix over the basis {|++>, |+->, |-+>, |-->}.
// Construction enforces hermiticity and unit trace to 1e-12 and positivity
// down to -1e-10 (worse violations throw PsdError).
class TwoSiteDensity {
 public:
  explicit TwoSiteDensity(const Eigen::Matrix4cd& m);
  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

// rho = 1/4 (I + mz (sz x I + I x sz) + xx sx x sx + yy sy x sy + zz sz x sz).
TwoSiteDensity two_site_density(double mz, double xx, double yy, double zz);

// Wootters concurrence: square roots of the eigenvalues of
// rho (sy x sy) rho* (sy x sy), sorted descending; C = max(l1-l2-l3-l4, 0).
double concurrence_wootters(const TwoSiteDensity& rho);

// Closed form for the isotropic-chain X state assembled from (G_0, G_1):
// C = max(0, |g1| - sqrt(1/4 (1 + g0^2 - g1^2)^2 - g0^2)).
double concurrence_xstate_closed(double g0, double g1);

// -Tr rho log2 rho for a small Hermitian density matrix (2x2 or 4x4).
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

}  // namespace xyw

#endif  // XYWAVE_ENTANGLEMENT_HPP
