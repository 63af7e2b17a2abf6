/* xywave: transverse-field XY chain thermal entanglement and decoherence-wave
 * dynamics. C API of the shared library; all computation handles are opaque
 * and immutable once created, so they may be shared across threads.
 *
 * Density matrices cross this boundary as row-major complex arrays with
 * interleaved (re, im) doubles: a dim x dim matrix occupies 2*dim*dim
 * doubles. Every function returns XYW_OK or an error code; on error, the
 * thread-local message from xyw_last_error_message() explains the failure.
 * Inverse temperature beta accepts HUGE_VAL to select the T = 0 ensemble.
 */

#ifndef XYWAVE_H
#define XYWAVE_H

#include <stddef.h>

#if defined(_WIN32)
#define XYW_API __declspec(dllexport)
#else
#define XYW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xyw_status {
  XYW_OK = 0,
  XYW_ERR_INVALID_ARGUMENT = 1, /* bad value, wrong size, out of range */
  XYW_ERR_DOMAIN = 2,           /* operation undefined there (e.g. gamma != 0) */
  XYW_ERR_CONVERGENCE = 3,      /* quadrature failed to converge */
  XYW_ERR_INTERNAL = 4
} xyw_status;

typedef struct xyw_params xyw_params;
typedef struct xyw_quadrature xyw_quadrature;
typedef struct xyw_thermal xyw_thermal;
typedef struct xyw_wave_profile xyw_wave_profile;
typedef struct xyw_oracle xyw_oracle;

XYW_API const char* xyw_version(void);
XYW_API const char* xyw_status_name(xyw_status status);
/* Message for the most recent failure on this thread. */
XYW_API const char* xyw_last_error_message(void);

/* ---- model parameters and scalar kernels ---- */

XYW_API xyw_status xyw_params_create(double lambda, double gamma, double beta,
                                     xyw_params** out);
XYW_API void xyw_params_destroy(xyw_params* p);
XYW_API xyw_status xyw_params_get(const xyw_params* p, double* lambda,
                                  double* gamma, double* beta);

/* node_count <= 0 or tolerance <= 0 select the defaults (64, 1e-10). */
XYW_API xyw_status xyw_quadrature_create(int node_count, double tolerance,
                                         xyw_quadrature** out);
XYW_API void xyw_quadrature_destroy(xyw_quadrature* q);

XYW_API xyw_status xyw_dispersion(const xyw_params* p, double k, double* out);
XYW_API xyw_status xyw_thermal_weight(double energy, double beta, double* out);
XYW_API xyw_status xyw_oscillatory_weight(double energy, double t, double* out);
XYW_API xyw_status xyw_bessel_j(long n, double x, double* out);

/* ---- equilibrium correlators ---- */

XYW_API xyw_status xyw_thermal_create(const xyw_params* p, const xyw_quadrature* q,
                                      int max_offset, int sign_convention,
                                      xyw_thermal** out);
XYW_API void xyw_thermal_destroy(xyw_thermal* h);
XYW_API xyw_status xyw_thermal_g(const xyw_thermal* h, int x, double* out);
XYW_API xyw_status xyw_thermal_magnetization(const xyw_thermal* h, double* out);
XYW_API xyw_status xyw_thermal_pair(const xyw_thermal* h, int x, double* xx,
                                    double* yy, double* zz);

/* ---- two-qubit entanglement ---- */

XYW_API xyw_status xyw_two_site_density(double mz, double xx, double yy, double zz,
                                        double rho_out[32]);
XYW_API xyw_status xyw_concurrence_wootters(const double rho[32], double* out);
XYW_API xyw_status xyw_concurrence_xstate(double g0, double g1, double* out);
/* dim is 2 or 4; rho holds 2*dim*dim doubles. */
XYW_API xyw_status xyw_von_neumann_entropy(const double* rho, int dim, double* out);

/* ---- post-measurement dynamics (finite T, gamma = 0 closed forms) ---- */

XYW_API xyw_status xyw_time_kernels(const xyw_params* p, const xyw_quadrature* q,
                                    int x, double t, double* phi, double* k_hat);
XYW_API xyw_status xyw_appendix_integrals(const xyw_params* p,
                                          const xyw_quadrature* q, int x, double t,
                                          double* alpha, double* beta_x,
                                          double* alpha_prime,
                                          double* beta_hat_prime_x);
XYW_API xyw_status xyw_magnetization_selective(const xyw_params* p,
                                               const xyw_quadrature* q, int x,
                                               double t, double* out);
XYW_API xyw_status xyw_magnetization_nonselective(const xyw_params* p,
                                                  const xyw_quadrature* q, int x,
                                                  double t, double* out);

/* ---- T = 0 wave, entanglement and channel ---- */

/* min_mass <= 0 selects the default 1 - 1e-10. */
XYW_API xyw_status xyw_wave_profile_create(long m, double t, double lambda,
                                           double min_mass, xyw_wave_profile** out);
XYW_API void xyw_wave_profile_destroy(xyw_wave_profile* w);
XYW_API xyw_status xyw_wave_profile_window(const xyw_wave_profile* w, long* lo,
                                           long* hi);
XYW_API xyw_status xyw_wave_profile_amplitude(const xyw_wave_profile* w, long site,
                                              double* out);
XYW_API xyw_status xyw_wave_profile_mass(const xyw_wave_profile* w, double* out);

XYW_API xyw_status xyw_two_site_state(double w_i, double w_j, double rho_out[32]);
XYW_API xyw_status xyw_site_observables(double w_i, double* magnetization_z_half,
                                        double* entropy);
XYW_API xyw_status xyw_pair_concurrence(double w_i, double w_j, double* out);
XYW_API xyw_status xyw_fidelity(double w_i, double* out);
XYW_API xyw_status xyw_apply_damping_channel(const double rho_in[8], double w_i,
                                             double rho_out[8]);

/* ---- brute-force reference chain ---- */

/* Builds and fully diagonalizes the 2^n periodic chain; 2 <= n <= 14. */
XYW_API xyw_status xyw_oracle_create(int n, const xyw_params* p, xyw_oracle** out);
XYW_API void xyw_oracle_destroy(xyw_oracle* h);
XYW_API xyw_status xyw_oracle_site_count(const xyw_oracle* h, int* out);
/* pauli is a string of length n over I, X, Y, Z (pauli[i] acts on site i). */
XYW_API xyw_status xyw_oracle_thermal_expectation(const xyw_oracle* h, double beta,
                                                  const char* pauli, double* out);
XYW_API xyw_status xyw_oracle_conditional_dynamics(const xyw_oracle* h, double beta,
                                                   int l, int m, double t,
                                                   int selective, double* out);
XYW_API xyw_status xyw_oracle_partial_trace(const xyw_oracle* h, double beta, int i,
                                            int j, double rho_out[32]);

/* Amplitudes of exp(+i t H_ring) applied at site m of an n-site ring
 * (diagonal 1, hopping lambda/2); re and im must hold n doubles each. */
XYW_API xyw_status xyw_single_excitation_evolution(long n, double lambda, long m,
                                                   double t, double* re, double* im);

#ifdef __cplusplus
}
#endif

#endif /* XYWAVE_H */
