#include "xywave/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xywave/errors.hpp"

namespace xyw {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdClip = 1e-10;

Eigen::Matrix4d spin_flip_yy() {
  Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

TwoSiteDensity::TwoSiteDensity(const Eigen::Matrix4cd& m) : m_(m) {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("TwoSiteDensity: matrix is not Hermitian");
  if (std::abs(m_.trace() - std::complex<double>(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("TwoSiteDensity: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdClip)
    throw PsdError("TwoSiteDensity: eigenvalue below the positivity clip threshold");
}

TwoSiteDensity two_site_density(double mz, double xx, double yy, double zz) {
  for (double v : {mz, xx, yy, zz})
    if (!std::isfinite(v) || std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("two_site_density: correlators must be in [-1, 1]");
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 0.25 * (1.0 + 2.0 * mz + zz);
  m(1, 1) = 0.25 * (1.0 - zz);
  m(2, 2) = 0.25 * (1.0 - zz);
  m(3, 3) = 0.25 * (1.0 - 2.0 * mz + zz);
  m(0, 3) = m(3, 0) = 0.25 * (xx - yy);
  m(1, 2) = m(2, 1) = 0.25 * (xx + yy);
  return TwoSiteDensity(m);
}

double concurrence_wootters(const TwoSiteDensity& rho) {
  const Eigen::Matrix4d y = spin_flip_yy();
  const Eigen::Matrix4cd& r = rho.matrix();
  const Eigen::Matrix4cd product = r * y * r.conjugate() * y;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(product, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("concurrence_wootters: eigenvalue solver failed");
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-10)
      throw std::runtime_error("concurrence_wootters: spin-flip spectrum not real");
    double re = ev.real();
    if (re < 0.0) {
      if (re < -1e-10)
        throw std::runtime_error("concurrence_wootters: spin-flip spectrum negative");
      re = 0.0;
    }
    roots[i] = std::sqrt(re);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double c = roots[0] - roots[1] - roots[2] - roots[3];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_xstate_closed(double g0, double g1) {
  const double s = 1.0 + g0 * g0 - g1 * g1;
  const double radicand = std::max(0.0, 0.25 * s * s - g0 * g0);
  const double c = std::abs(g1) - std::sqrt(radicand);
  return std::clamp(c, 0.0, 1.0);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 2)
    throw std::invalid_argument("von_neumann_entropy: expected a square density matrix");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("von_neumann_entropy: matrix is not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("von_neumann_entropy: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("von_neumann_entropy: eigenvalue solver failed");
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double mu = es.eigenvalues()(i);
    if (mu < -kPsdClip) throw PsdError("von_neumann_entropy: not positive semidefinite");
    if (mu > 0.0) s -= mu * std::log2(mu);
  }
  return std::max(0.0, s);
}

}  // namespace xyw
