#include "xywave/zerotemp.hpp"

#include <cmath>
#include <stdexcept>

#include "xywave/bessel.hpp"

namespace xyw {

namespace {

void check_amplitude(double w, const char* who) {
  if (!std::isfinite(w) || std::abs(w) > 1.0 + 1e-12)
    throw std::invalid_argument(std::string(who) + ": amplitude must lie in [-1, 1]");
}

}  // namespace

WaveProfile::WaveProfile(long m, double t, double lambda, double min_mass)
    : m_(m), t_(t), lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw std::domain_error("WaveProfile: requires 0 <= lambda < 1");
  if (!(t >= 0.0)) throw std::invalid_argument("WaveProfile: t must be >= 0");
  if (!(min_mass > 0.0 && min_mass <= 1.0))
    throw std::invalid_argument("WaveProfile: min_mass must be in (0, 1]");

  const double z = lambda * t;
  long radius = (long)std::ceil(z + 20.0 + 10.0 * std::cbrt(std::max(0.0, z)));
  for (;;) {
    const auto seq = bessel_j_sequence((int)radius, z);
    mass_ = seq[0] * seq[0];
    for (long d = 1; d <= radius; ++d) mass_ += 2.0 * seq[d] * seq[d];
    if (mass_ >= min_mass || radius > (1L << 22)) {
      lo_ = m_ - radius;
      w_.assign(2 * radius + 1, 0.0);
      for (long l = lo_; l <= m_ + radius; ++l) {
        const long d = m_ - l;
        const double v = seq[std::labs(d)];
        w_[l - lo_] = (d < 0 && (d & 1L)) ? -v : v;  // J_{-n} = (-1)^n J_n
      }
      break;
    }
    radius = radius * 3 / 2 + 10;
  }
  if (mass_ < min_mass)
    throw std::runtime_error("WaveProfile: window growth failed to capture min_mass");
}

double WaveProfile::amplitude(long site) const {
  if (site < lo_ || site > site_hi()) return 0.0;
  return w_[site - lo_];
}

TwoSiteDensity two_site_state(double w_i, double w_j) {
  check_amplitude(w_i, "two_site_state");
  check_amplitude(w_j, "two_site_state");
  if (w_i * w_i + w_j * w_j > 1.0 + 1e-12)
    throw std::invalid_argument("two_site_state: w_i^2 + w_j^2 must not exceed 1");
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(1, 1) = 0.5 * w_i * w_i;
  m(2, 2) = 0.5 * w_j * w_j;
  m(3, 3) = 0.5 * (2.0 - w_i * w_i - w_j * w_j);
  m(1, 2) = m(2, 1) = 0.5 * w_i * w_j;
  m(1, 3) = m(3, 1) = 0.5 * w_i;
  m(2, 3) = m(3, 2) = 0.5 * w_j;
  return TwoSiteDensity(m);
}

SiteObservables site_observables(double w_i) {
  check_amplitude(w_i, "site_observables");
  const double w2 = w_i * w_i;
  const double det4 = w2 * (1.0 - w2);  // 4 det(rho_i)
  const double root = std::sqrt(std::max(0.0, 1.0 - det4));
  const double mu1 = 0.5 * (1.0 + root);
  const double mu2 = 0.5 * (1.0 - root);
  double s = 0.0;
  if (mu1 > 0.0) s -= mu1 * std::log2(mu1);
  if (mu2 > 0.0) s -= mu2 * std::log2(mu2);
  return SiteObservables{0.5 * (w2 - 1.0), std::max(0.0, s)};
}

double pair_concurrence(double w_i, double w_j) {
  check_amplitude(w_i, "pair_concurrence");
  check_amplitude(w_j, "pair_concurrence");
  if (w_i * w_i + w_j * w_j > 1.0 + 1e-12)
    throw std::invalid_argument("pair_concurrence: w_i^2 + w_j^2 must not exceed 1");
  return std::abs(w_i * w_j);
}

double fidelity(double w_i) {
  check_amplitude(w_i, "fidelity");
  return 0.5 * (1.0 + w_i);
}

Eigen::Matrix2cd apply_damping_channel(const Eigen::Matrix2cd& rho, double w_i) {
  check_amplitude(w_i, "apply_damping_channel");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
      std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("apply_damping_channel: not a density matrix");
  Eigen::Matrix2cd m0 = Eigen::Matrix2cd::Zero();
  m0(0, 0) = w_i;
  m0(1, 1) = 1.0;
  Eigen::Matrix2cd m1 = Eigen::Matrix2cd::Zero();
  m1(1, 0) = std::sqrt(std::max(0.0, 1.0 - w_i * w_i));
  return m0 * rho * m0.adjoint() + m1 * rho * m1.adjoint();
}

}  // namespace xyw
