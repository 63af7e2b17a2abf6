#include "xywave.h"

#include <complex>
#include <exception>
#include <stdexcept>
#include <string>

#include "xywave/analytic.hpp"
#include "xywave/bessel.hpp"
#include "xywave/dynamics.hpp"
#include "xywave/entanglement.hpp"
#include "xywave/errors.hpp"
#include "xywave/oracle.hpp"
#include "xywave/quadrature.hpp"
#include "xywave/thermal.hpp"
#include "xywave/zerotemp.hpp"

struct xyw_params {
  xyw::ModelParams value;
};
struct xyw_quadrature {
  xyw::Quadrature value;
};
struct xyw_thermal {
  xyw::ThermalCorrelators value;
};
struct xyw_wave_profile {
  xyw::WaveProfile value;
};
struct xyw_oracle {
  xyw::OracleChain value;
};

namespace {

thread_local std::string g_last_error;

xyw_status fail(xyw_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs the body and maps C++ exceptions onto status codes.
template <typename Fn>
xyw_status guarded(Fn&& fn) {
  try {
    fn();
    return XYW_OK;
  } catch (const std::domain_error& e) {
    return fail(XYW_ERR_DOMAIN, e.what());
  } catch (const xyw::ConvergenceError& e) {
    return fail(XYW_ERR_CONVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(XYW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(XYW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(XYW_ERR_INTERNAL, e.what());
  }
}

template <typename T>
xyw_status require(const T* ptr, const char* what) {
  return ptr ? XYW_OK : fail(XYW_ERR_INVALID_ARGUMENT, what);
}

Eigen::MatrixXcd read_matrix(const double* in, int dim) {
  Eigen::MatrixXcd m(dim, dim);
  // row-major interleaved input into Eigen's column-major storage
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = std::complex<double>(in[2 * (r * dim + c)], in[2 * (r * dim + c) + 1]);
  return m;
}

void write_matrix_rowmajor(const Eigen::MatrixXcd& m, double* out) {
  const int dim = (int)m.rows();
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      out[2 * (r * dim + c)] = m(r, c).real();
      out[2 * (r * dim + c) + 1] = m(r, c).imag();
    }
}

}  // namespace

extern "C" {

const char* xyw_version(void) { return "0.1.0"; }

const char* xyw_status_name(xyw_status status) {
  switch (status) {
    case XYW_OK:
      return "ok";
    case XYW_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case XYW_ERR_DOMAIN:
      return "domain error";
    case XYW_ERR_CONVERGENCE:
      return "convergence failure";
    case XYW_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* xyw_last_error_message(void) { return g_last_error.c_str(); }

xyw_status xyw_params_create(double lambda, double gamma, double beta,
                             xyw_params** out) {
  if (auto s = require(out, "xyw_params_create: out is null")) return s;
  return guarded([&] { *out = new xyw_params{xyw::ModelParams(lambda, gamma, beta)}; });
}

void xyw_params_destroy(xyw_params* p) { delete p; }

xyw_status xyw_params_get(const xyw_params* p, double* lambda, double* gamma,
                          double* beta) {
  if (auto s = require(p, "xyw_params_get: params is null")) return s;
  if (lambda) *lambda = p->value.lambda;
  if (gamma) *gamma = p->value.gamma;
  if (beta) *beta = p->value.beta;
  return XYW_OK;
}

xyw_status xyw_quadrature_create(int node_count, double tolerance,
                                 xyw_quadrature** out) {
  if (auto s = require(out, "xyw_quadrature_create: out is null")) return s;
  return guarded([&] {
    xyw::Quadrature q;
    if (node_count > 0) q.node_count = node_count;
    if (tolerance > 0.0) q.tolerance = tolerance;
    *out = new xyw_quadrature{q};
  });
}

void xyw_quadrature_destroy(xyw_quadrature* q) { delete q; }

xyw_status xyw_dispersion(const xyw_params* p, double k, double* out) {
  if (auto s = require(p, "xyw_dispersion: params is null")) return s;
  if (auto s = require(out, "xyw_dispersion: out is null")) return s;
  return guarded([&] { *out = xyw::dispersion(k, p->value); });
}

xyw_status xyw_thermal_weight(double energy, double beta, double* out) {
  if (auto s = require(out, "xyw_thermal_weight: out is null")) return s;
  return guarded([&] { *out = xyw::thermal_weight(energy, beta); });
}

xyw_status xyw_oscillatory_weight(double energy, double t, double* out) {
  if (auto s = require(out, "xyw_oscillatory_weight: out is null")) return s;
  return guarded([&] { *out = xyw::oscillatory_weight(energy, t); });
}

xyw_status xyw_bessel_j(long n, double x, double* out) {
  if (auto s = require(out, "xyw_bessel_j: out is null")) return s;
  return guarded([&] { *out = xyw::bessel_j(n, x); });
}

xyw_status xyw_thermal_create(const xyw_params* p, const xyw_quadrature* q,
                              int max_offset, int sign_convention,
                              xyw_thermal** out) {
  if (auto s = require(p, "xyw_thermal_create: params is null")) return s;
  if (auto s = require(q, "xyw_thermal_create: quadrature is null")) return s;
  if (auto s = require(out, "xyw_thermal_create: out is null")) return s;
  return guarded([&] {
    *out = new xyw_thermal{
        xyw::ThermalCorrelators(p->value, q->value, max_offset, sign_convention)};
  });
}

void xyw_thermal_destroy(xyw_thermal* h) { delete h; }

xyw_status xyw_thermal_g(const xyw_thermal* h, int x, double* out) {
  if (auto s = require(h, "xyw_thermal_g: handle is null")) return s;
  if (auto s = require(out, "xyw_thermal_g: out is null")) return s;
  return guarded([&] { *out = h->value.g(x); });
}

xyw_status xyw_thermal_magnetization(const xyw_thermal* h, double* out) {
  if (auto s = require(h, "xyw_thermal_magnetization: handle is null")) return s;
  if (auto s = require(out, "xyw_thermal_magnetization: out is null")) return s;
  return guarded([&] { *out = h->value.magnetization_z(); });
}

xyw_status xyw_thermal_pair(const xyw_thermal* h, int x, double* xx, double* yy,
                            double* zz) {
  if (auto s = require(h, "xyw_thermal_pair: handle is null")) return s;
  return guarded([&] {
    const auto pair = h->value.pair_correlators(x);
    if (xx) *xx = pair.xx;
    if (yy) *yy = pair.yy;
    if (zz) *zz = pair.zz;
  });
}

xyw_status xyw_two_site_density(double mz, double xx, double yy, double zz,
                                double rho_out[32]) {
  if (auto s = require(rho_out, "xyw_two_site_density: rho_out is null")) return s;
  return guarded([&] {
    const auto rho = xyw::two_site_density(mz, xx, yy, zz);
    write_matrix_rowmajor(rho.matrix(), rho_out);
  });
}

xyw_status xyw_concurrence_wootters(const double rho[32], double* out) {
  if (auto s = require(rho, "xyw_concurrence_wootters: rho is null")) return s;
  if (auto s = require(out, "xyw_concurrence_wootters: out is null")) return s;
  return guarded([&] {
    const xyw::TwoSiteDensity d{Eigen::Matrix4cd(read_matrix(rho, 4))};
    *out = xyw::concurrence_wootters(d);
  });
}

xyw_status xyw_concurrence_xstate(double g0, double g1, double* out) {
  if (auto s = require(out, "xyw_concurrence_xstate: out is null")) return s;
  return guarded([&] { *out = xyw::concurrence_xstate_closed(g0, g1); });
}

xyw_status xyw_von_neumann_entropy(const double* rho, int dim, double* out) {
  if (auto s = require(rho, "xyw_von_neumann_entropy: rho is null")) return s;
  if (auto s = require(out, "xyw_von_neumann_entropy: out is null")) return s;
  if (dim != 2 && dim != 4)
    return fail(XYW_ERR_INVALID_ARGUMENT, "xyw_von_neumann_entropy: dim must be 2 or 4");
  return guarded([&] { *out = xyw::von_neumann_entropy(read_matrix(rho, dim)); });
}

xyw_status xyw_time_kernels(const xyw_params* p, const xyw_quadrature* q, int x,
                            double t, double* phi, double* k_hat) {
  if (auto s = require(p, "xyw_time_kernels: params is null")) return s;
  if (auto s = require(q, "xyw_time_kernels: quadrature is null")) return s;
  return guarded([&] {
    const auto k = xyw::time_kernels(x, t, p->value, q->value);
    if (phi) *phi = k.phi;
    if (k_hat) *k_hat = k.k_hat;
  });
}

xyw_status xyw_appendix_integrals(const xyw_params* p, const xyw_quadrature* q,
                                  int x, double t, double* alpha, double* beta_x,
                                  double* alpha_prime, double* beta_hat_prime_x) {
  if (auto s = require(p, "xyw_appendix_integrals: params is null")) return s;
  if (auto s = require(q, "xyw_appendix_integrals: quadrature is null")) return s;
  return guarded([&] {
    const auto a = xyw::appendix_integrals(x, t, p->value, q->value);
    if (alpha) *alpha = a.alpha;
    if (beta_x) *beta_x = a.beta_x;
    if (alpha_prime) *alpha_prime = a.alpha_prime;
    if (beta_hat_prime_x) *beta_hat_prime_x = a.beta_hat_prime_x;
  });
}

xyw_status xyw_magnetization_selective(const xyw_params* p, const xyw_quadrature* q,
                                       int x, double t, double* out) {
  if (auto s = require(p, "xyw_magnetization_selective: params is null")) return s;
  if (auto s = require(q, "xyw_magnetization_selective: quadrature is null")) return s;
  if (auto s = require(out, "xyw_magnetization_selective: out is null")) return s;
  return guarded([&] { *out = xyw::magnetization_selective(x, t, p->value, q->value); });
}

xyw_status xyw_magnetization_nonselective(const xyw_params* p,
                                          const xyw_quadrature* q, int x, double t,
                                          double* out) {
  if (auto s = require(p, "xyw_magnetization_nonselective: params is null")) return s;
  if (auto s = require(q, "xyw_magnetization_nonselective: quadrature is null"))
    return s;
  if (auto s = require(out, "xyw_magnetization_nonselective: out is null")) return s;
  return guarded(
      [&] { *out = xyw::magnetization_nonselective(x, t, p->value, q->value); });
}

xyw_status xyw_wave_profile_create(long m, double t, double lambda, double min_mass,
                                   xyw_wave_profile** out) {
  if (auto s = require(out, "xyw_wave_profile_create: out is null")) return s;
  return guarded([&] {
    const double mass = min_mass > 0.0 ? min_mass : 1.0 - 1e-10;
    *out = new xyw_wave_profile{xyw::WaveProfile(m, t, lambda, mass)};
  });
}

void xyw_wave_profile_destroy(xyw_wave_profile* w) { delete w; }

xyw_status xyw_wave_profile_window(const xyw_wave_profile* w, long* lo, long* hi) {
  if (auto s = require(w, "xyw_wave_profile_window: handle is null")) return s;
  if (lo) *lo = w->value.site_lo();
  if (hi) *hi = w->value.site_hi();
  return XYW_OK;
}

xyw_status xyw_wave_profile_amplitude(const xyw_wave_profile* w, long site,
                                      double* out) {
  if (auto s = require(w, "xyw_wave_profile_amplitude: handle is null")) return s;
  if (auto s = require(out, "xyw_wave_profile_amplitude: out is null")) return s;
  *out = w->value.amplitude(site);
  return XYW_OK;
}

xyw_status xyw_wave_profile_mass(const xyw_wave_profile* w, double* out) {
  if (auto s = require(w, "xyw_wave_profile_mass: handle is null")) return s;
  if (auto s = require(out, "xyw_wave_profile_mass: out is null")) return s;
  *out = w->value.captured_mass();
  return XYW_OK;
}

xyw_status xyw_two_site_state(double w_i, double w_j, double rho_out[32]) {
  if (auto s = require(rho_out, "xyw_two_site_state: rho_out is null")) return s;
  return guarded([&] {
    const auto rho = xyw::two_site_state(w_i, w_j);
    write_matrix_rowmajor(rho.matrix(), rho_out);
  });
}

xyw_status xyw_site_observables(double w_i, double* magnetization_z_half,
                                double* entropy) {
  return guarded([&] {
    const auto obs = xyw::site_observables(w_i);
    if (magnetization_z_half) *magnetization_z_half = obs.magnetization_z_half;
    if (entropy) *entropy = obs.entropy;
  });
}

xyw_status xyw_pair_concurrence(double w_i, double w_j, double* out) {
  if (auto s = require(out, "xyw_pair_concurrence: out is null")) return s;
  return guarded([&] { *out = xyw::pair_concurrence(w_i, w_j); });
}

xyw_status xyw_fidelity(double w_i, double* out) {
  if (auto s = require(out, "xyw_fidelity: out is null")) return s;
  return guarded([&] { *out = xyw::fidelity(w_i); });
}

xyw_status xyw_apply_damping_channel(const double rho_in[8], double w_i,
                                     double rho_out[8]) {
  if (auto s = require(rho_in, "xyw_apply_damping_channel: rho_in is null")) return s;
  if (auto s = require(rho_out, "xyw_apply_damping_channel: rho_out is null"))
    return s;
  return guarded([&] {
    const Eigen::Matrix2cd rho(read_matrix(rho_in, 2));
    const Eigen::Matrix2cd mapped = xyw::apply_damping_channel(rho, w_i);
    write_matrix_rowmajor(mapped, rho_out);
  });
}

xyw_status xyw_oracle_create(int n, const xyw_params* p, xyw_oracle** out) {
  if (auto s = require(p, "xyw_oracle_create: params is null")) return s;
  if (auto s = require(out, "xyw_oracle_create: out is null")) return s;
  return guarded([&] { *out = new xyw_oracle{xyw::OracleChain(n, p->value)}; });
}

void xyw_oracle_destroy(xyw_oracle* h) { delete h; }

xyw_status xyw_oracle_site_count(const xyw_oracle* h, int* out) {
  if (auto s = require(h, "xyw_oracle_site_count: handle is null")) return s;
  if (auto s = require(out, "xyw_oracle_site_count: out is null")) return s;
  *out = h->value.site_count();
  return XYW_OK;
}

xyw_status xyw_oracle_thermal_expectation(const xyw_oracle* h, double beta,
                                          const char* pauli, double* out) {
  if (auto s = require(h, "xyw_oracle_thermal_expectation: handle is null")) return s;
  if (auto s = require(pauli, "xyw_oracle_thermal_expectation: pauli is null"))
    return s;
  if (auto s = require(out, "xyw_oracle_thermal_expectation: out is null")) return s;
  return guarded([&] { *out = h->value.thermal_expectation(beta, pauli); });
}

xyw_status xyw_oracle_conditional_dynamics(const xyw_oracle* h, double beta, int l,
                                           int m, double t, int selective,
                                           double* out) {
  if (auto s = require(h, "xyw_oracle_conditional_dynamics: handle is null")) return s;
  if (auto s = require(out, "xyw_oracle_conditional_dynamics: out is null")) return s;
  return guarded(
      [&] { *out = h->value.conditional_dynamics(beta, l, m, t, selective != 0); });
}

xyw_status xyw_oracle_partial_trace(const xyw_oracle* h, double beta, int i, int j,
                                    double rho_out[32]) {
  if (auto s = require(h, "xyw_oracle_partial_trace: handle is null")) return s;
  if (auto s = require(rho_out, "xyw_oracle_partial_trace: rho_out is null")) return s;
  return guarded([&] {
    const auto rho = h->value.partial_trace_two_site(beta, i, j);
    write_matrix_rowmajor(rho.matrix(), rho_out);
  });
}

xyw_status xyw_single_excitation_evolution(long n, double lambda, long m, double t,
                                           double* re, double* im) {
  if (auto s = require(re, "xyw_single_excitation_evolution: re is null")) return s;
  if (auto s = require(im, "xyw_single_excitation_evolution: im is null")) return s;
  return guarded([&] {
    const auto amp = xyw::single_excitation_evolution(n, lambda, m, t);
    for (long l = 0; l < n; ++l) {
      re[l] = amp[l].real();
      im[l] = amp[l].imag();
    }
  });
}

}  // extern "C"
