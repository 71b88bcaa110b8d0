/*
 * dyson2d — C API for the exact beta = 1 planar-gas energy toolkit.
 *
 * All functions return a dy2_status; results are written through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with dy2_string_free(). Opaque handles have matching *_free()
 * functions. Exact integers and rationals cross the boundary as decimal
 * strings ("p" or "p/q") so that no precision is lost.
 *
 * dy2_last_error() returns a thread-local description of the most recent
 * failure in the calling thread.
 */

#ifndef DYSON2D_H
#define DYSON2D_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t dy2_status;

enum {
    DY2_OK = 0,
    DY2_EINVAL = 1,    /* invalid argument / precondition violation */
    DY2_ECHECK = 2,    /* verification or golden-table check failed */
    DY2_ECONVERGE = 3, /* could not certify the requested accuracy */
    DY2_ELIMIT = 4,    /* documented size guard exceeded */
    DY2_EDOMAIN = 5,   /* math domain error */
    DY2_EINTERNAL = 6
};

const char* dy2_status_name(dy2_status s);
const char* dy2_last_error(void);
void dy2_string_free(char* s);

/* ---- exact kernel ---------------------------------------------------- */

dy2_status dy2_factorial(uint32_t n, char** out);
dy2_status dy2_harmonic(uint32_t n, char** out);
dy2_status dy2_gamma_half_ratio(uint32_t k, char** out);

/* Exact rational combination over the basis {1, gamma, ln 2, ln N}. */
typedef struct dy2_expr dy2_expr;
void dy2_expr_free(dy2_expr* e);

typedef enum {
    DY2_COEFF_ONE = 0,
    DY2_COEFF_GAMMA = 1,
    DY2_COEFF_LN2 = 2,
    DY2_COEFF_LNN = 3
} dy2_coeff;

dy2_status dy2_expr_coeff(const dy2_expr* e, dy2_coeff which, char** out);
/* 0 when the expression has no ln N component. */
dy2_status dy2_expr_n_ref(const dy2_expr* e, uint32_t* out);
dy2_status dy2_expr_is_zero(const dy2_expr* e, int32_t* out);
/* Decimal rendering at the requested working digits. */
dy2_status dy2_expr_eval(const dy2_expr* e, uint32_t digits, char** out);
dy2_status dy2_expr_str(const dy2_expr* e, char** out);

dy2_status dy2_digamma_int(uint32_t n, dy2_expr** out);

/* ---- correlator ------------------------------------------------------- */

dy2_status dy2_partition_beta1(uint32_t n, char** out);
dy2_status dy2_e_formula(uint32_t n, uint32_t eps, char** out);
/* Permutation-expansion route; guarded to n <= 6, eps <= 4 (DY2_ELIMIT). */
dy2_status dy2_e_oracle(uint32_t n, uint32_t eps, char** out);

typedef struct dy2_etable dy2_etable;
dy2_status dy2_e_table(uint32_t n_max, uint32_t eps_max, dy2_etable** out);
void dy2_etable_free(dy2_etable* t);
uint32_t dy2_etable_rows(const dy2_etable* t);
uint32_t dy2_etable_cols(const dy2_etable* t);
/* n in [2, n_max], eps in [1, eps_max]. */
dy2_status dy2_etable_cell(const dy2_etable* t, uint32_t n, uint32_t eps, char** out);

/* ---- recursions -------------------------------------------------------- */

/* Sweeps both difference equations: the e_N(eps) recursion residual for
 * 2 <= N <= e_n_max, 0 <= eps <= e_eps_max, and the energy recursion
 * residual for 2 <= N <= energy_n_max - 3. Any nonzero residual yields
 * DY2_ECHECK; the report lists one line per family. */
dy2_status dy2_verify_recursions(uint32_t e_n_max, uint32_t e_eps_max, uint32_t energy_n_max,
                                 char** report);
/* E_n obtained by forward-solving the energy recursion (n >= 2). */
dy2_status dy2_energy_forward(uint32_t n, dy2_expr** out);

/* ---- closed form ------------------------------------------------------- */

dy2_status dy2_energy_exact(uint32_t n, dy2_expr** out);
dy2_status dy2_energy_rescaled(uint32_t n, dy2_expr** out);
dy2_status dy2_finite_sum(uint32_t n, char** out);
dy2_status dy2_hyp3f2(uint32_t n, uint32_t digits, char** out);
dy2_status dy2_hyp3f2_identity_residual(uint32_t n, uint32_t digits, char** out);

/* ---- asymptotics ------------------------------------------------------- */

uint32_t dy2_asymptotic_term_count(void);
/* Coefficient parts are rational strings; coeff_inv_sqrt_pi multiplies
 * 1/sqrt(pi). power_halves is the exponent of N in half units. */
dy2_status dy2_asymptotic_term(uint32_t index, int32_t* power_halves, int32_t* is_log,
                               char** coeff_one, char** coeff_gamma, char** coeff_inv_sqrt_pi);
dy2_status dy2_energy_asymptotic(uint32_t n, int32_t truncate_after_halves, uint32_t digits,
                                 char** out);
dy2_status dy2_tail_constant(dy2_expr** out);

/* ---- Monte Carlo ------------------------------------------------------- */

typedef struct {
    uint32_t n;
    uint64_t sweeps; /* measurement sweeps per chain */
    uint32_t chains;
    uint64_t burn_in; /* 0 = default (sweeps / 10) */
    uint64_t seed;
} dy2_mc_params;

typedef struct {
    double mean;
    double std_error;
    uint64_t sweeps;
    uint32_t chains;
    uint64_t burn_in;
    double acceptance_rate;
    uint64_t seed;
    int32_t mixing_failure;
} dy2_mc_estimate;

dy2_status dy2_mc_estimate_energy(const dy2_mc_params* params, dy2_mc_estimate* out);

/* ---- golden tables ------------------------------------------------------ */

/* golden_json NULL = embedded copies; DY2_ECHECK on any mismatching cell,
 * with the offending cells named in the report. */
dy2_status dy2_paper_tables_check(const char* golden_json, char** report);
dy2_status dy2_golden_dump(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DYSON2D_H */
