#ifndef KGPT_KGPT_H
#define KGPT_KGPT_H

/*
 * C interface to the kgpt library: closed-form Klein-Gordon bound states with
 * position-dependent mass and PT-symmetric vector potentials, plus the
 * numerical cross-checks. All functions return a kgpt_status; on failure
 * kgpt_last_error_message() describes the error for the calling thread.
 * Objects are opaque handles released with the matching *_destroy function.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(KGPT_BUILDING_LIBRARY)
#    define KGPT_API __declspec(dllexport)
#  else
#    define KGPT_API __declspec(dllimport)
#  endif
#else
#  define KGPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kgpt_status {
  KGPT_OK = 0,
  KGPT_ERR_INVALID_PARAMETER = 1,
  KGPT_ERR_INADMISSIBLE_LEVEL = 2,
  KGPT_ERR_DEGENERATE_LEVEL = 3,
  KGPT_ERR_NO_SIGN_CHANGE = 4,
  KGPT_ERR_CONVERGENCE = 5,
  KGPT_ERR_POLE = 6,
  KGPT_ERR_RECURRENCE = 7,
  KGPT_ERR_SHAPE_INVARIANCE = 8,
  KGPT_ERR_NULL_ARGUMENT = 9,
  KGPT_ERR_OUT_OF_RANGE = 10,
  KGPT_ERR_INTERNAL = 11
} kgpt_status;

typedef enum kgpt_model_kind {
  KGPT_MODEL_LINEAR = 0,     /* M = sqrt(mu^2 + (lambda x / c)^2), V = i c eta x */
  KGPT_MODEL_HYPERBOLIC = 1  /* tanh(alpha x) profiles */
} kgpt_model_kind;

typedef enum kgpt_branch { KGPT_BRANCH_PLUS = 0, KGPT_BRANCH_MINUS = 1 } kgpt_branch;

typedef struct kgpt_params {
  int model; /* kgpt_model_kind */
  double mu;
  double lambda;
  double eta;
  double alpha; /* ignored by the linear model */
  double hbar;
  double c;
} kgpt_params;

typedef struct kgpt_bounds {
  int bounded;              /* 0: unlimited number of levels */
  int n_max_effective;      /* -1 when unbounded */
  int n_max_physical;       /* -1 when unbounded or when no level is physical */
  int constraint_satisfied; /* lambda^2 > hbar alpha^2 |eta| */
} kgpt_bounds;

typedef struct kgpt_level {
  int n;
  double energy_plus;
  double energy_minus;
} kgpt_level;

typedef struct kgpt_wavefunction_info {
  int n;
  int branch;
  double energy;
  double coefficient; /* A or B */
  double normalization_magnitude;
  double log_normalization;
  int phase_quarter_turns; /* phase e^{i n pi/2} as n mod 4 */
  double center_shift_re, center_shift_im;
  double exponent_a_re, exponent_a_im;
  double exponent_b_re, exponent_b_im;
  double support_half_width;
} kgpt_wavefunction_info;

typedef struct kgpt_verify_options {
  int max_level;
  int num_points;
  double half_width; /* <= 0: default */
  double energy_perturbation;
  int stationary_contour;
} kgpt_verify_options;

typedef struct kgpt_check {
  const char* name;   /* owned by the report */
  const char* detail; /* owned by the report */
  int level;          /* -1 when not tied to a level */
  int passed;
  int skipped;
  double measured;
  double tolerance;
} kgpt_check;

typedef struct kgpt_limit_row {
  double parameter;
  int n;
  double value;
  double target;
  double deviation;
  double order; /* NaN for the first row of each level */
  double xi_shift;
  double wavefunction_deviation;
  int level_count;
  int admissible;
} kgpt_limit_row;

typedef struct kgpt_model kgpt_model;
typedef struct kgpt_spectrum kgpt_spectrum;
typedef struct kgpt_wavefunction kgpt_wavefunction;
typedef struct kgpt_report kgpt_report;
typedef struct kgpt_limits kgpt_limits;

KGPT_API const char* kgpt_version(void);
KGPT_API const char* kgpt_status_string(kgpt_status status);
KGPT_API const char* kgpt_last_error_message(void);

/* Defaults: mu = lambda = alpha = hbar = c = 1, eta = 0. */
KGPT_API kgpt_params kgpt_default_params(kgpt_model_kind model);

KGPT_API kgpt_status kgpt_model_create(const kgpt_params* params, kgpt_model** out);
KGPT_API void kgpt_model_destroy(kgpt_model* model);
KGPT_API kgpt_status kgpt_model_get_params(const kgpt_model* model, kgpt_params* out);
KGPT_API kgpt_status kgpt_model_bounds(const kgpt_model* model, kgpt_bounds* out);
/* A (linear) or B (hyperbolic). */
KGPT_API kgpt_status kgpt_model_leading_coefficient(const kgpt_model* model,
                                                    double* out);
KGPT_API kgpt_status kgpt_model_effective_potential(const kgpt_model* model,
                                                    double energy, double x,
                                                    double* re, double* im);
/* eps_n(E) of the auxiliary Schroedinger-like problem (closed form). */
KGPT_API kgpt_status kgpt_model_epsilon(const kgpt_model* model, int n,
                                        double energy, double* out);
KGPT_API kgpt_status kgpt_model_level(const kgpt_model* model, int n,
                                      kgpt_level* out);
/* Root of eps_n(E) = 0 on [lo, hi]; grid_points > 0 uses the finite-difference
 * eigensolve with that many points instead of the closed form. */
KGPT_API kgpt_status kgpt_model_quantization_root(const kgpt_model* model, int n,
                                                  double lo, double hi,
                                                  int grid_points, double* out);

KGPT_API kgpt_status kgpt_spectrum_compute(const kgpt_model* model, int n_cutoff,
                                           kgpt_spectrum** out);
KGPT_API void kgpt_spectrum_destroy(kgpt_spectrum* spectrum);
KGPT_API size_t kgpt_spectrum_size(const kgpt_spectrum* spectrum);
KGPT_API kgpt_status kgpt_spectrum_level(const kgpt_spectrum* spectrum, size_t i,
                                         kgpt_level* out);
KGPT_API kgpt_status kgpt_spectrum_bounds(const kgpt_spectrum* spectrum,
                                          kgpt_bounds* out);
/* Levels dropped because the energy denominator vanishes. */
KGPT_API size_t kgpt_spectrum_degenerate_count(const kgpt_spectrum* spectrum);
KGPT_API kgpt_status kgpt_spectrum_degenerate(const kgpt_spectrum* spectrum,
                                              size_t i, int* n);

KGPT_API kgpt_status kgpt_wavefunction_create(const kgpt_model* model, int n,
                                              kgpt_branch branch,
                                              kgpt_wavefunction** out);
KGPT_API void kgpt_wavefunction_destroy(kgpt_wavefunction* wf);
KGPT_API kgpt_status kgpt_wavefunction_get_info(const kgpt_wavefunction* wf,
                                                kgpt_wavefunction_info* out);
KGPT_API kgpt_status kgpt_wavefunction_eval(const kgpt_wavefunction* wf,
                                            const double* xs, size_t count,
                                            double* re, double* im);
/* int psi^2 dx, expected (-1)^n. */
KGPT_API kgpt_status kgpt_wavefunction_pt_norm(const kgpt_wavefunction* wf,
                                               double* re, double* im,
                                               double* edge_ratio);

KGPT_API kgpt_verify_options kgpt_default_verify_options(void);
KGPT_API kgpt_status kgpt_verify_run(const kgpt_model* model,
                                     const kgpt_verify_options* options,
                                     kgpt_report** out);
KGPT_API void kgpt_report_destroy(kgpt_report* report);
KGPT_API int kgpt_report_passed(const kgpt_report* report);
KGPT_API int kgpt_report_physical_levels(const kgpt_report* report);
KGPT_API size_t kgpt_report_size(const kgpt_report* report);
KGPT_API kgpt_status kgpt_report_check(const kgpt_report* report, size_t i,
                                       kgpt_check* out);

/* lambda = mu omega, eta = mu xi / c; deviation of E_n - mu c^2 from
 * (n + 1/2) hbar omega for each c. */
KGPT_API kgpt_status kgpt_limits_nonrelativistic(double mu, double omega, double xi,
                                                 double hbar, const double* c_values,
                                                 size_t c_count, const int* levels,
                                                 size_t level_count,
                                                 kgpt_limits** out);
/* Hyperbolic model at each alpha against the linear model with the same
 * mu, lambda, eta, hbar, c (the alpha in params is ignored). */
KGPT_API kgpt_status kgpt_limits_alpha(const kgpt_params* params,
                                       const double* alpha_values,
                                       size_t alpha_count, const int* levels,
                                       size_t level_count, double x_extent,
                                       int x_points, kgpt_limits** out);
KGPT_API void kgpt_limits_destroy(kgpt_limits* limits);
KGPT_API size_t kgpt_limits_size(const kgpt_limits* limits);
KGPT_API kgpt_status kgpt_limits_row(const kgpt_limits* limits, size_t i,
                                     kgpt_limit_row* out);

#ifdef __cplusplus
}
#endif

#endif /* KGPT_KGPT_H */
