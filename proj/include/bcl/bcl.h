// Copyright (c) 2026 The bcl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the Bloch-Cesaro lab.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a bcl_status; on
 * failure bcl_last_error() holds a one-line message for the calling thread
 * and no output handle is written. Strings returned through char** are
 * heap-allocated and must be released with bcl_string_free.
 */
#ifndef BCL_BCL_H
#define BCL_BCL_H

#include <stddef.h>

#if defined(_WIN32)
#define BCL_API __declspec(dllexport)
#else
#define BCL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bcl_status {
  BCL_OK = 0,
  BCL_ERR_DOMAIN = 1,         /* argument outside the mathematical domain */
  BCL_ERR_SPECTRUM_EMPTY = 2, /* g(0) = 0: no eigenfunction */
  BCL_ERR_CONTRACT = 3,       /* precondition violated */
  BCL_ERR_FORMAT = 4,         /* malformed JSON input */
  BCL_ERR_NULL_ARGUMENT = 5,
  BCL_ERR_INTERNAL = 6
} bcl_status;

typedef struct bcl_series bcl_series;
typedef struct bcl_grid bcl_grid;
typedef struct bcl_symbol bcl_symbol;
typedef struct bcl_matrix bcl_matrix;

BCL_API const char* bcl_version(void);
BCL_API const char* bcl_last_error(void);
BCL_API const char* bcl_status_name(bcl_status status);
BCL_API void bcl_string_free(char* s);
BCL_API size_t bcl_default_order(void);

/* ---- power series ------------------------------------------------------ */

/* im may be NULL for real coefficients. count >= 1. */
BCL_API bcl_status bcl_series_create(const double* re, const double* im, size_t count,
                                     bcl_series** out);
BCL_API bcl_status bcl_series_monomial(size_t degree, size_t order, bcl_series** out);
/* {"coeffs": [[re, im], ...]} or a bare array of numbers / pairs. */
BCL_API bcl_status bcl_series_from_json(const char* json, bcl_series** out);
BCL_API bcl_status bcl_series_to_json(const bcl_series* f, char** out);
BCL_API bcl_status bcl_series_to_csv(const bcl_series* f, char** out);
BCL_API void bcl_series_free(bcl_series* f);
BCL_API bcl_status bcl_series_order(const bcl_series* f, size_t* order);
BCL_API bcl_status bcl_series_coeff(const bcl_series* f, size_t n, double* re, double* im);
BCL_API bcl_status bcl_series_resize(const bcl_series* f, size_t order, bcl_series** out);

BCL_API bcl_status bcl_pochhammer(double a_re, double a_im, int n, double* re, double* im);
BCL_API bcl_status bcl_binomial_series(double beta, double b_re, double b_im, size_t order,
                                       bcl_series** out);
BCL_API bcl_status bcl_series_mul(const bcl_series* f, const bcl_series* g, bcl_series** out);
BCL_API bcl_status bcl_series_exp(const bcl_series* u, bcl_series** out);
BCL_API bcl_status bcl_series_integrate(const bcl_series* f, bcl_series** out);
BCL_API bcl_status bcl_series_derivative(const bcl_series* f, bcl_series** out);
BCL_API bcl_status bcl_series_div_by_z(const bcl_series* f, bcl_series** out);
BCL_API bcl_status bcl_series_eval(const bcl_series* f, double z_re, double z_im, double* re,
                                   double* im, double* tail_estimate);

/* ---- sampling grid and Bloch norms ------------------------------------- */

BCL_API bcl_status bcl_grid_create_default(int n_radial, int n_angular, double r_max,
                                           bcl_grid** out);
BCL_API void bcl_grid_free(bcl_grid* g);
BCL_API bcl_status bcl_grid_shape(const bcl_grid* g, size_t* n_radii, size_t* n_angles);

typedef struct bcl_seminorm_result {
  double value;
  double argmax_re;
  double argmax_im;
  double max_tail;
  size_t excluded_points;
} bcl_seminorm_result;

typedef struct bcl_growth_result {
  int passed;
  double worst_margin;
  double worst_re;
  double worst_im;
  size_t checked_points;
  size_t excluded_points;
} bcl_growth_result;

BCL_API bcl_status bcl_seminorm_estimate(const bcl_series* f, double alpha, const bcl_grid* g,
                                         bcl_seminorm_result* out);
BCL_API bcl_status bcl_bloch_norm(const bcl_series* f, double alpha, const bcl_grid* g,
                                  double* out);
BCL_API bcl_status bcl_growth_bound(double alpha, double r, double seminorm, double f0,
                                    double* out);
BCL_API bcl_status bcl_growth_check(const bcl_series* f, double alpha, const bcl_grid* g,
                                    bcl_growth_result* out);
/* r,theta,weight,abs_fprime,product,tail,excluded per grid point. */
BCL_API bcl_status bcl_seminorm_records_csv(const bcl_series* f, double alpha,
                                            const bcl_grid* g, char** out);

/* ---- symbols and operators --------------------------------------------- */

/* Terms a_j / (1 - e^{i b_angle_j} w)^beta; a_im may be NULL; h may be NULL (h = 0). */
BCL_API bcl_status bcl_symbol_create(double beta, const double* a_re, const double* a_im,
                                     const double* b_angle, size_t count, const bcl_series* h,
                                     bcl_symbol** out);
BCL_API bcl_status bcl_symbol_beta_cesaro(double beta, bcl_symbol** out);
BCL_API bcl_status bcl_symbol_from_json(const char* json, bcl_symbol** out);
BCL_API bcl_status bcl_symbol_to_json(const bcl_symbol* s, char** out);
BCL_API void bcl_symbol_free(bcl_symbol* s);
BCL_API bcl_status bcl_symbol_g0(const bcl_symbol* s, double* re, double* im);
BCL_API bcl_status bcl_symbol_beta(const bcl_symbol* s, double* beta);
BCL_API bcl_status bcl_symbol_series(const bcl_symbol* s, size_t order, bcl_series** out);

BCL_API bcl_status bcl_apply_generalized(const bcl_series* f, const bcl_symbol* s,
                                         bcl_series** out);
BCL_API bcl_status bcl_apply_beta_cesaro(const bcl_series* f, double beta, bcl_series** out);
BCL_API bcl_status bcl_compact_approximant(const bcl_series* f, const bcl_symbol* s,
                                           double dilation, bcl_series** out);
BCL_API bcl_status bcl_preimage_under_cesaro(const bcl_series* g, bcl_series** out);

BCL_API bcl_status bcl_operator_matrix(const bcl_symbol* s, size_t size, bcl_matrix** out);
BCL_API void bcl_matrix_free(bcl_matrix* m);
BCL_API bcl_status bcl_matrix_size(const bcl_matrix* m, size_t* size);
/* 1-based row/col. */
BCL_API bcl_status bcl_matrix_entry(const bcl_matrix* m, size_t row, size_t col, double* re,
                                    double* im);
BCL_API bcl_status bcl_matrix_apply(const bcl_matrix* m, const bcl_series* f, bcl_series** out);
BCL_API bcl_status bcl_matrix_to_csv(const bcl_matrix* m, char** out);
/* Writes size() eigenvalues sorted by decreasing modulus; capacity must be >= size. */
BCL_API bcl_status bcl_truncated_spectrum(const bcl_matrix* m, double* re, double* im,
                                          size_t capacity);

BCL_API bcl_status bcl_eigenfunction_psi(const bcl_symbol* s, int n, size_t order,
                                         bcl_series** out);
BCL_API bcl_status bcl_eigenvector(const bcl_symbol* s, int n, size_t order, bcl_series** out);
/* {"g0", "admissibility", "predicted" (count values), "terms", "source", "note"} */
BCL_API bcl_status bcl_point_spectrum_json(const bcl_symbol* s, double alpha, size_t count,
                                           char** out);
BCL_API bcl_status bcl_approximate_eigen_probe(const bcl_symbol* s, int n, double alpha,
                                               const bcl_grid* g, size_t order, double* out);

/* ---- boundedness certificates ------------------------------------------ */

enum {
  BCL_VERDICT_BOUNDED = 1,
  BCL_VERDICT_UNBOUNDED = 2,
  BCL_VERDICT_COMPACT = 4,
  BCL_VERDICT_ESSENTIAL_NORM_ZERO = 8,
  BCL_VERDICT_NOT_COVERED = 16
};

typedef enum bcl_counterexample { BCL_EX26 = 0, BCL_EX27 = 1, BCL_EX28 = 2 } bcl_counterexample;

/* flags: OR of BCL_VERDICT_*; json (nullable): {"verdict", "source"}. */
BCL_API bcl_status bcl_classify(double alpha, double beta, unsigned* flags, char** json);
BCL_API bcl_status bcl_bound_constant(double alpha, double beta, double* value,
                                      int* at_boundary);
/* t may be NULL to use the default abscissae 0.9 .. 0.9999. */
BCL_API bcl_status bcl_counterexample_probe_json(double alpha, double beta,
                                                 bcl_counterexample which, const double* t,
                                                 size_t count, char** out);
BCL_API bcl_status bcl_one_minus_power_bound(long long n, double* out);

/* ---- compactness probes ------------------------------------------------ */

typedef enum bcl_family_kind { BCL_FAMILY_MONOMIAL = 0, BCL_FAMILY_DILATION = 1 } bcl_family_kind;

/* {"family": {...}, "samples": [{"m", "norm"}], "verdict"} */
BCL_API bcl_status bcl_compactness_probe_json(const bcl_symbol* s, double alpha,
                                              bcl_family_kind kind, int m_max,
                                              const bcl_grid* g, size_t order, char** out);
/* Default test family; {"samples": [{"dilation", "max_distance", "argmax_member"}], "verdict"} */
BCL_API bcl_status bcl_essential_norm_probe_json(const bcl_symbol* s, double alpha,
                                                 const double* dilations, size_t count,
                                                 const bcl_grid* g, size_t order, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BCL_BCL_H */
