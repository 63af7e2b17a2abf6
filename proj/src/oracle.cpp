#include "xywave/oracle.hpp"

#include <cblas.h>
#include <fftw3.h>
#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyw {

namespace {

using cplx = std::complex<double>;

constexpr double kWeightCutoff = 1e-16;  // thermal weights below this are dropped

// C = A * B for square column-major matrices through BLAS.
Eigen::MatrixXd gemm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     bool transpose_a = false) {
  const int n = (int)a.rows();
  Eigen::MatrixXd c(n, n);
  cblas_dgemm(CblasColMajor, transpose_a ? CblasTrans : CblasNoTrans, CblasNoTrans,
              n, n, n, 1.0, a.data(), n, b.data(), n, 0.0, c.data(), n);
  return c;
}

}  // namespace

Eigen::MatrixXd build_xy_hamiltonian(int n, const ModelParams& p) {
  if (n < 2 || n > 14)
    throw std::invalid_argument("build_xy_hamiltonian: n must be in [2, 14]");
  const long dim = 1L << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double hop = -0.5 * p.lambda;         // opposite spins on the bond
  const double pair = -0.5 * p.lambda * p.gamma;  // aligned spins on the bond
  for (long b = 0; b < dim; ++b) {
    h(b, b) = -0.5 * (2.0 * __builtin_popcountl(b) - n);
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const long mask = (1L << i) | (1L << j);
      const bool aligned = ((b >> i) & 1L) == ((b >> j) & 1L);
      const double amp = aligned ? pair : hop;
      if (amp != 0.0) h(b ^ mask, b) += amp;
    }
  }
  return h;
}

OracleChain::OracleChain(int n, const ModelParams& p) : n_(n), params_(p) {
  Eigen::MatrixXd h = build_xy_hamiltonian(n, p);
  const long dim = h.rows();
  evals_.resize(dim);
  const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', (int)dim, h.data(),
                                  (int)dim, evals_.data());
  if (info != 0) throw std::runtime_error("OracleChain: dsyevd failed");
  evecs_ = std::move(h);  // overwritten with the eigenvectors
}

Eigen::VectorXd OracleChain::thermal_weights(double beta) const {
  const long dim = evals_.size();
  Eigen::VectorXd w(dim);
  const double e0 = evals_.minCoeff();
  double z = 0.0;
  for (long s = 0; s < dim; ++s) {
    w(s) = std::isinf(beta) ? (evals_(s) - e0 < 1e-12 ? 1.0 : 0.0)
                            : std::exp(-beta * (evals_(s) - e0));
    z += w(s);
  }
  return w / z;
}

double OracleChain::thermal_expectation(double beta, std::string_view pauli) const {
  if ((int)pauli.size() != n_)
    throw std::invalid_argument("thermal_expectation: Pauli string length must equal n");
  long flip = 0;
  for (int i = 0; i < n_; ++i) {
    switch (pauli[i]) {
      case 'I':
      case 'Z':
        break;
      case 'X':
      case 'Y':
        flip |= 1L << i;
        break;
      default:
        throw std::invalid_argument("thermal_expectation: Pauli chars are I, X, Y, Z");
    }
  }
  const long dim = evals_.size();
  const Eigen::VectorXd w = thermal_weights(beta);
  cplx total = 0.0;
  for (long s = 0; s < dim; ++s) {
    if (w(s) < kWeightCutoff) continue;
    const auto v = evecs_.col(s);
    cplx acc = 0.0;
    for (long b = 0; b < dim; ++b) {
      const long bp = b ^ flip;
      cplx phase = 1.0;
      for (int i = 0; i < n_; ++i) {
        const bool up = (b >> i) & 1L;
        switch (pauli[i]) {
          case 'Z':
            if (!up) phase = -phase;
            break;
          case 'Y':
            // sigma_y |up> = i |down>, sigma_y |down> = -i |up>
            phase *= up ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
            break;
          default:
            break;
        }
      }
      acc += v(bp) * phase * v(b);
    }
    total += w(s) * acc;
  }
  return total.real();
}

// Everything a repeated (l, m) dynamics query needs, precomputed in the
// energy eigenbasis. With P and A = sigma_z^m/2 both diagonal in the
// computational basis, A~ = V^T A V and P~ = V^T P V are symmetric, and
//   Tr(W A(t))         = z^dag (W o A~) z,  z_s = exp(i E_s t),
// for any symmetric W expressed in the eigenbasis.
struct OracleChain::Conditioned {
  Eigen::MatrixXd m_w;    // (P~ rho P~) o A~
  Eigen::MatrixXd m_pa;   // P~ o A~
  Eigen::VectorXd rho;    // normalized thermal weights
  Eigen::VectorXd adiag;  // diagonal of A~
  double p_norm = 0.0;    // Tr(rho P)
  double a_mean = 0.0;    // Tr(rho A)
};

const OracleChain::Conditioned& OracleChain::conditioned(double beta, int l,
                                                         int m) const {
  const auto key = std::make_tuple(beta, l, m);
  {
    std::scoped_lock lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }

  const long dim = evals_.size();
  auto cond = std::make_shared<Conditioned>();
  cond->rho = thermal_weights(beta);

  Eigen::VectorXd d_a(dim), d_p(dim);
  for (long b = 0; b < dim; ++b) {
    d_a(b) = ((b >> m) & 1L) ? 0.5 : -0.5;
    d_p(b) = ((b >> l) & 1L) ? 1.0 : 0.0;
  }

  const Eigen::MatrixXd a_tilde = gemm(evecs_, d_a.asDiagonal() * evecs_, true);
  const Eigen::MatrixXd p_tilde = gemm(evecs_, d_p.asDiagonal() * evecs_, true);
  const Eigen::MatrixXd w_tilde =
      gemm(p_tilde * cond->rho.asDiagonal(), p_tilde);

  cond->m_w = w_tilde.cwiseProduct(a_tilde);
  cond->m_pa = p_tilde.cwiseProduct(a_tilde);
  cond->adiag = a_tilde.diagonal();
  cond->p_norm = (cond->rho.array() * p_tilde.diagonal().array()).sum();
  cond->a_mean = (cond->rho.array() * cond->adiag.array()).sum();

  std::scoped_lock lock(cache_mutex_);
  // The matrices are dim^2 doubles each; keep the cache small.
  if (cache_.size() >= (n_ <= 12 ? 8u : 1u)) cache_.clear();
  return *cache_.emplace(key, std::move(cond)).first->second;
}

namespace {

// Real matrix times complex vector as two real products.
Eigen::VectorXcd real_matvec(const Eigen::MatrixXd& m, const Eigen::VectorXcd& z) {
  const Eigen::VectorXd re = m * z.real();
  const Eigen::VectorXd im = m * z.imag();
  Eigen::VectorXcd y(re.size());
  y.real() = re;
  y.imag() = im;
  return y;
}

}  // namespace

double OracleChain::conditional_dynamics(double beta, int l, int m, double t,
                                         bool selective) const {
  if (l < 0 || l >= n_ || m < 0 || m >= n_)
    throw std::invalid_argument("conditional_dynamics: sites must lie in [0, n)");
  const Conditioned& c = conditioned(beta, l, m);
  const long dim = evals_.size();

  Eigen::VectorXcd z(dim);
  for (long s = 0; s < dim; ++s) z(s) = std::polar(1.0, evals_(s) * t);

  const Eigen::VectorXcd yw = real_matvec(c.m_w, z);
  const double t4 = z.dot(yw).real();  // Tr(P rho P A(t))
  if (selective) {
    if (c.p_norm < 1e-14)
      throw std::runtime_error("conditional_dynamics: degenerate conditioning");
    return t4 / c.p_norm;
  }
  const Eigen::VectorXcd ypa = real_matvec(c.m_pa, z);
  cplx t2 = 0.0;  // Tr(rho P A(t))
  for (long s = 0; s < dim; ++s) t2 += std::conj(z(s)) * c.rho(s) * ypa(s);
  return c.a_mean - 2.0 * t2.real() + 2.0 * t4;
}

TwoSiteDensity OracleChain::partial_trace_two_site(double beta, int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j)
    throw std::invalid_argument("partial_trace_two_site: need two distinct sites");
  const long dim = evals_.size();
  const Eigen::VectorXd w = thermal_weights(beta);
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  const long mi = 1L << i, mj = 1L << j;
  for (long s = 0; s < dim; ++s) {
    if (w(s) < kWeightCutoff) continue;
    const auto v = evecs_.col(s);
    for (long b = 0; b < dim; ++b) {
      // basis {++, +-, -+, --}: row 0 has both bits set
      const int a = (((b >> i) & 1L) ? 0 : 2) + (((b >> j) & 1L) ? 0 : 1);
      const long rest = b | mi | mj;
      for (int ap = 0; ap < 4; ++ap) {
        const long bp = rest ^ ((ap & 2) ? mi : 0) ^ ((ap & 1) ? mj : 0);
        acc(a, ap) += w(s) * v(b) * v(bp);
      }
    }
  }
  return TwoSiteDensity(acc.cast<cplx>());
}

TwoSiteDensity OracleChain::partial_trace_two_site(const Eigen::VectorXcd& state,
                                                   int n, int i, int j) {
  const long dim = 1L << n;
  if (state.size() != dim)
    throw std::invalid_argument("partial_trace_two_site: state size != 2^n");
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw std::invalid_argument("partial_trace_two_site: need two distinct sites");
  Eigen::Matrix4cd acc = Eigen::Matrix4cd::Zero();
  const long mi = 1L << i, mj = 1L << j;
  for (long b = 0; b < dim; ++b) {
    const int a = (((b >> i) & 1L) ? 0 : 2) + (((b >> j) & 1L) ? 0 : 1);
    const long rest = b | mi | mj;
    for (int ap = 0; ap < 4; ++ap) {
      const long bp = rest ^ ((ap & 2) ? mi : 0) ^ ((ap & 1) ? mj : 0);
      acc(a, ap) += state(b) * std::conj(state(bp));
    }
  }
  return TwoSiteDensity(acc);
}

std::vector<cplx> single_excitation_evolution(long n, double lambda, long m,
                                              double t) {
  if (n < 3) throw std::invalid_argument("single_excitation_evolution: n must be >= 3");
  if (m < 0 || m >= n)
    throw std::invalid_argument("single_excitation_evolution: m must lie in [0, n)");
  if (!(t >= 0.0) || !(lambda >= 0.0))
    throw std::invalid_argument("single_excitation_evolution: need t >= 0, lambda >= 0");
  if (lambda * t >= 0.5 * n - 10.0)
    throw std::runtime_error(
        "single_excitation_evolution: wavefront reaches the ring boundary");

  // Circulant eigenbasis: amplitude(l) = (1/n) sum_j e^{ik_j(l-m)} e^{it(1+lambda cos k_j)},
  // evaluated as one backward DFT of the phase factors.
  std::vector<cplx> spectrum(n), out(n);
  for (long j = 0; j < n; ++j) {
    const double k = 2.0 * std::numbers::pi * j / n;
    spectrum[j] = std::polar(1.0, t * (1.0 + lambda * std::cos(k)));
  }
  static std::mutex planner_mutex;
  fftw_plan plan;
  {
    std::scoped_lock lock(planner_mutex);
    plan = fftw_plan_dft_1d((int)n, reinterpret_cast<fftw_complex*>(spectrum.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::scoped_lock lock(planner_mutex);
    fftw_destroy_plan(plan);
  }

  std::vector<cplx> amp(n);
  for (long l = 0; l < n; ++l) amp[l] = out[((l - m) % n + n) % n] / (double)n;
  return amp;
}

}  // namespace xyw
