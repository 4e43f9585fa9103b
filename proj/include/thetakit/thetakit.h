/* thetakit: theta functions, elliptic integrals, Brownian kernels on [-1, 1],
 * discrete Gaussian laws and the Kolmogorov distribution.
 *
 * Every function returns a tk_status. On failure the output arguments are left
 * untouched and tk_last_error() describes the problem (per thread).
 * Policy pointers may be NULL, meaning tk_default_policy().
 */
#ifndef THETAKIT_THETAKIT_H
#define THETAKIT_THETAKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TK_API __declspec(dllexport)
#else
#define TK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_ERR_DOMAIN = 1,
  TK_ERR_NONCONVERGENT = 2,
  TK_ERR_OVERFLOW = 3,
  TK_ERR_UNKNOWN_IDENTITY = 4,
  TK_ERR_NULL_ARGUMENT = 5,
  TK_ERR_INTERNAL = 6
} tk_status;

TK_API const char* tk_status_string(tk_status status);
TK_API const char* tk_last_error(void);

/* Truncation: a series stops once its tail bound is below tol; it fails with
 * TK_ERR_NONCONVERGENT after max_terms terms. */
typedef struct tk_policy {
  double tol;
  int max_terms;
} tk_policy;

TK_API tk_policy tk_default_policy(void);

/* ---- theta functions ---------------------------------------------------- */

typedef enum { TK_THETA_SERIES = 0, TK_THETA_PRODUCT = 1 } tk_theta_method;

/* kind in 1..4, nome q in (0, 1). */
TK_API tk_status tk_theta(int kind, double z, double q, tk_theta_method method,
                          const tk_policy* policy, double* out);
TK_API tk_status tk_theta1_prime(double z, double q, const tk_policy* policy, double* out);
/* Both sides of the real-form modular identity at tau = i t. */
TK_API tk_status tk_modular_pair(int kind, double z, double t, const tk_policy* policy,
                                 double* lhs, double* rhs);

/* ---- elliptic integrals ------------------------------------------------- */

typedef struct tk_modulus {
  double k;
  double k_prime;
  double K;
  double K_prime;
  double E;
  double E_prime;
} tk_modulus;

TK_API tk_status tk_ellip_k(double k, double* out);
TK_API tk_status tk_ellip_e(double k, double* out);
TK_API tk_status tk_modulus_from_k(double k, tk_modulus* out);
/* The k with K(k')/K(k) = c. */
TK_API tk_status tk_modulus_from_lattice(double c, tk_modulus* out);
TK_API tk_status tk_lattice_from_modulus(double k, double* out);
TK_API tk_status tk_nome_from_modulus(double k, double* out);
TK_API tk_status tk_landen_ascend(double k, double* out);
TK_API tk_status tk_legendre_defect(double k, double* out);

typedef struct tk_singular {
  int r;
  double k_r;
  double K_r;
  double alpha_r;
} tk_singular;

/* Closed-form singular modulus data, r in 1..10. */
TK_API tk_status tk_singular_reference(int r, tk_singular* out);

/* ---- discrete Gaussian laws --------------------------------------------- */

typedef enum { TK_FAMILY_THETA2 = 2, TK_FAMILY_THETA3 = 3 } tk_family;
typedef enum { TK_VAR_ELLIPTIC = 0, TK_VAR_LAMBERT = 1, TK_VAR_DIRECT = 2 } tk_variance_route;
typedef enum { TK_CUMULANT_LAMBERT = 0, TK_CUMULANT_EISENSTEIN = 1 } tk_cumulant_route;
typedef enum { TK_SAMPLER_EXACT = 0, TK_SAMPLER_BERNOULLI = 1 } tk_sampler;

/* Variance at c = sqrt(r): closed form, and the rounded published value. */
TK_API tk_status tk_variance_closed_form(tk_family family, int r, double* out);
TK_API tk_status tk_variance_printed(tk_family family, int r, double* out);

typedef struct tk_dist tk_dist;
typedef struct tk_rng tk_rng;

TK_API tk_status tk_dist_create(tk_family family, double c, tk_dist** out);
TK_API tk_status tk_dist_create_from_modulus(tk_family family, double k, tk_dist** out);
TK_API void tk_dist_destroy(tk_dist* dist);

TK_API tk_status tk_dist_modulus(const tk_dist* dist, tk_modulus* out);
TK_API tk_status tk_dist_support(const tk_dist* dist, long* min, long* max);
TK_API tk_status tk_dist_pmf(const tk_dist* dist, long n, double* out);
TK_API tk_status tk_dist_mean(const tk_dist* dist, double* out);
TK_API tk_status tk_dist_variance(const tk_dist* dist, tk_variance_route route,
                                  const tk_policy* policy, double* out);
/* Cumulant of X (order 1 is the mean), order in 1..30. */
TK_API tk_status tk_dist_cumulant(const tk_dist* dist, int order, tk_cumulant_route route,
                                  const tk_policy* policy, double* out);
TK_API tk_status tk_dist_mgf(const tk_dist* dist, double z, const tk_policy* policy,
                             double* out);
/* E[(-1)^X]. */
TK_API tk_status tk_dist_signed_mean(const tk_dist* dist, double* out);
TK_API tk_status tk_dist_odd_probability(const tk_dist* dist, double* out);
/* Shannon entropy (nats) by direct summation. */
TK_API tk_status tk_dist_entropy(const tk_dist* dist, double* out);
/* theta_3 entropy from K, K' and the variance. */
TK_API tk_status tk_entropy_theta3_elliptic(double k, double* out);

TK_API tk_status tk_rng_create(uint64_t seed, tk_rng** out);
TK_API void tk_rng_destroy(tk_rng* rng);

TK_API tk_status tk_dist_sample(const tk_dist* dist, tk_rng* rng, tk_sampler sampler,
                                const tk_policy* policy, long* out);

/* ---- Brownian motion on [-1, 1] ----------------------------------------- */

typedef enum { TK_PROCESS_REFLECTED = 0, TK_PROCESS_KILLED = 1 } tk_process;
typedef enum { TK_METHOD_IMAGES = 0, TK_METHOD_SPECTRAL = 1 } tk_method;
typedef enum { TK_EXIT_BRIDGE = 0, TK_EXIT_PLAIN_EULER = 1 } tk_exit_scheme;

/* Transition density with respect to the speed measure 2 dy. */
TK_API tk_status tk_bm_density(tk_process process, tk_method method, double t, double x,
                               double y, const tk_policy* policy, double* out);
TK_API tk_status tk_bm_green(tk_process process, tk_method method, double alpha, double x,
                             double y, const tk_policy* policy, double* out);
/* Exit time H of (-1, 1) from 0. */
TK_API tk_status tk_bm_exit_survival(double t, const tk_policy* policy, double* out);
TK_API tk_status tk_bm_exit_density(tk_method method, double t, const tk_policy* policy,
                                    double* out);
TK_API tk_status tk_bm_exit_sample(tk_rng* rng, double dt, tk_exit_scheme scheme,
                                   double* out);
/* Hitting time of 1 by a Bessel(3) process from 0. */
TK_API tk_status tk_bessel3_pdf(tk_method method, double t, const tk_policy* policy,
                                double* out);
TK_API tk_status tk_bessel3_cdf(tk_method method, double t, const tk_policy* policy,
                                double* out);
TK_API tk_status tk_bessel3_laplace(double alpha, double* out);

/* ---- Kolmogorov distribution -------------------------------------------- */

typedef enum {
  TK_KOLMOGOROV_SERIES = 0,
  TK_KOLMOGOROV_PRODUCT = 1,
  TK_KOLMOGOROV_ELLIPTIC = 2
} tk_kolmogorov_route;

TK_API tk_status tk_kolmogorov_cdf(double h, tk_kolmogorov_route route,
                                   const tk_policy* policy, double* out);
/* Product is not a density route (TK_ERR_DOMAIN). */
TK_API tk_status tk_kolmogorov_pdf(double h, tk_kolmogorov_route route,
                                   const tk_policy* policy, double* out);
/* An alternative elliptic density expression that does not equal F'(h). */
TK_API tk_status tk_kolmogorov_pdf_alternative(double h, double* out);
/* Sup of |bridge| on an n_steps grid. */
TK_API tk_status tk_kolmogorov_bridge_sample(tk_rng* rng, long n_steps, double* out);

/* ---- partial-fraction expansions ---------------------------------------- */

typedef enum {
  TK_HYPERBOLIC_COTH = 0,
  TK_HYPERBOLIC_CSCH = 1,
  TK_HYPERBOLIC_TANH = 2,
  TK_HYPERBOLIC_SECH = 3
} tk_hyperbolic;

TK_API tk_status tk_ml_partial(tk_hyperbolic kind, double z, long n_terms, double* out);
TK_API tk_status tk_ml_accelerated(tk_hyperbolic kind, double z, long n_terms, double* out);
TK_API tk_status tk_ml_direct(tk_hyperbolic kind, double z, double* out);

/* ---- identity verification ---------------------------------------------- */

TK_API size_t tk_identity_count(void);
/* Registered label i, or NULL when out of range. */
TK_API const char* tk_identity_name(size_t index);

typedef struct tk_report_list tk_report_list;

/* Runs the named identities ("all" expands to the registry). tol <= 0 keeps
 * each identity's own tolerance. */
TK_API tk_status tk_verify_run(const char* const* names, size_t n_names, double tol,
                               const tk_policy* policy, tk_report_list** out);
TK_API void tk_report_list_destroy(tk_report_list* list);
TK_API size_t tk_report_count(const tk_report_list* list);

/* Borrowed view into one report; valid until the list is destroyed.
 * points holds n_points * n_axes values, row-major. */
typedef struct tk_report_view {
  const char* name;
  const char* description;
  size_t n_axes;
  const char* const* axes;
  size_t n_points;
  const double* points;
  const double* worst;
  double max_defect;
  double tol;
  int passed;
} tk_report_view;

TK_API tk_status tk_report_get(const tk_report_list* list, size_t index, tk_report_view* out);

#ifdef __cplusplus
}
#endif

#endif
