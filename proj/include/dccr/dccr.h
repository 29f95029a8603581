#ifndef DCCR_H
#define DCCR_H

/* C interface to the discretized-CCR workbench.  Every object lives behind an
 * opaque handle; every call returns a status code and reports detail through
 * dccr_last_error().  Strings returned through const char* stay owned by the
 * library (valid until the owning handle is freed); strings returned through
 * char** are heap copies released with dccr_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dccr_status {
    DCCR_OK = 0,
    DCCR_ERR_NULL = 1,    /* a required handle or pointer was NULL */
    DCCR_ERR_INVALID = 2, /* rejected precondition (bad parameter, misaligned step,
                             resonant phase, non-coprime p/q, ...) */
    DCCR_ERR_NUMERIC = 3  /* backend failure (eigensolver did not converge, ...) */
} dccr_status;

/* message for the most recent failure on this thread; empty string if none */
const char* dccr_last_error(void);

const char* dccr_version(void);

void dccr_string_free(char* s);

/* ---- twisted group algebra ---------------------------------------------- */

typedef struct dccr_element dccr_element;

/* element of l1(Z^2, omega) at theta = 2 pi p / q */
dccr_status dccr_element_create_rational(int64_t p, int64_t q, dccr_element** out);
/* ... at an arbitrary real theta (radians) */
dccr_status dccr_element_create_real(double theta, dccr_element** out);
dccr_status dccr_element_add(dccr_element* e, int64_t m, int64_t n, double re, double im);
dccr_status dccr_element_coeff(const dccr_element* e, int64_t m, int64_t n, double* re,
                               double* im);
dccr_status dccr_element_support(const dccr_element* e, int64_t* count);
dccr_status dccr_element_l1_norm(const dccr_element* e, double* norm);
dccr_status dccr_element_convolve(const dccr_element* a, const dccr_element* b,
                                  dccr_element** out);
dccr_status dccr_element_involution(const dccr_element* a, dccr_element** out);
dccr_status dccr_element_to_json(const dccr_element* e, char** json);
dccr_status dccr_element_from_json(const char* json, dccr_element** out);
void dccr_element_free(dccr_element* e);

/* ---- identity-check harness --------------------------------------------- */

typedef struct dccr_verify dccr_verify;

/* run every built-in dual-route identity suite; corrupt_omega != 0 swaps the
 * cocycle arguments on the expected side (the product-rule checks must then
 * fail — a liveness probe for the harness itself) */
dccr_status dccr_verify_run(uint64_t seed, int corrupt_omega, dccr_verify** out);
dccr_status dccr_verify_count(const dccr_verify* v, int64_t* count);
/* key/anchor pointers are owned by the handle */
dccr_status dccr_verify_item(const dccr_verify* v, int64_t index, const char** key,
                             const char** anchor, double* max_dev, double* tol, int* pass);
dccr_status dccr_verify_all_pass(const dccr_verify* v, int* pass);
void dccr_verify_free(dccr_verify* v);

/* ---- spectral band sweeps ----------------------------------------------- */

typedef struct dccr_band dccr_band;

/* bands of u + u* + c (v + v*) at theta = 2 pi p / q, swept over the
 * (n_phase+1)^2 phase lattice {2 pi i / n_phase}; requires gcd(p,q) = 1 and
 * q <= 256 */
dccr_status dccr_band_compute(int64_t p, int64_t q, double c, int n_phase,
                              dccr_band** out);
dccr_status dccr_band_count(const dccr_band* b, int64_t* count);
dccr_status dccr_band_get(const dccr_band* b, int64_t index, double* lo, double* hi);
dccr_status dccr_band_measure(const dccr_band* b, double* measure);
void dccr_band_free(dccr_band* b);

/* closest-to-golden coprime numerator for a denominator q */
dccr_status dccr_golden_numerator(int64_t q, int64_t* p);

/* debugging export: the q x q clock/shift Weyl matrix W_{(m,n)} at
 * theta = 2 pi p / q as CSV text, row-major "re,im" pairs */
dccr_status dccr_weyl_csv(int64_t p, int64_t q, int64_t m, int64_t n, char** csv);

/* ---- periodic grid model ------------------------------------------------ */

typedef struct dccr_grid dccr_grid;

/* N-point periodic grid with h = sqrt(2 pi k / (m_steps N)), tau = m_steps h */
dccr_status dccr_grid_periodic(int64_t n, int64_t m_steps, int64_t k, dccr_grid** out);
/* Dirichlet box [-L, L] with an explicit tau (continuum-limit mode; the
 * Hamiltonian is projected onto the principal momentum zone) */
dccr_status dccr_grid_truncated(int64_t n, double box_half_width, double tau,
                                dccr_grid** out);
dccr_status dccr_grid_info(const dccr_grid* g, int64_t* n, double* h, double* tau);
/* theta_eff = 2 pi flux_num / flux_den (periodic mode) */
dccr_status dccr_grid_flux(const dccr_grid* g, int64_t* flux_num, int64_t* flux_den);

/* ascending spectrum of H = 1/2 P_tau^2 + v(Q_tau) for v(x) = c x^2 / 2.
 * Call with values = NULL to query the eigenvalue count (periodic: N;
 * truncated: the zone dimension, only known after assembly). */
dccr_status dccr_grid_spectrum_harmonic(const dccr_grid* g, double c, double* values,
                                        int64_t capacity, int64_t* count);
/* same with a caller-tabulated potential diagonal v(Q_tau)_jj (length N) */
dccr_status dccr_grid_spectrum_tabulated(const dccr_grid* g, const double* v_diag,
                                         int64_t v_len, double* values, int64_t capacity,
                                         int64_t* count);
void dccr_grid_free(dccr_grid* g);

/* ---- polynomial growth witness ------------------------------------------ */

typedef struct dccr_witness dccr_witness;

/* growth table of p_n = T_n((2x^2-5)/3) for n = 1..n_max: sup over
 * X = [-2,-1] u [1,2] (samples_per_interval points per component) against the
 * value at lambda */
dccr_status dccr_witness_run(double lambda, int n_max, int samples_per_interval,
                             dccr_witness** out);
dccr_status dccr_witness_count(const dccr_witness* w, int64_t* count);
dccr_status dccr_witness_row(const dccr_witness* w, int64_t index, int* n, double* sup_on_x,
                             double* value_at_lambda, double* ratio, double* growth_base);
/* asymptotic growth base |u| + sqrt(u^2-1), u = (2 lambda^2 - 5)/3 */
dccr_status dccr_witness_growth_limit(double lambda, double* base);
void dccr_witness_free(dccr_witness* w);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DCCR_H */
