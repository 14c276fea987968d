#ifndef BINEQ_H
#define BINEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BINEQ_BUILDING)
#define BINEQ_API __declspec(dllexport)
#else
#define BINEQ_API __declspec(dllimport)
#endif
#else
#define BINEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bineq_poly bineq_poly;
typedef struct bineq_params bineq_params;

typedef enum bineq_status {
  BINEQ_OK = 0,
  BINEQ_ERR_DOMAIN = 1,        /* input outside the mathematical domain */
  BINEQ_ERR_USAGE = 2,         /* malformed JSON, unknown key or statement */
  BINEQ_ERR_INVALID_ARG = 3,   /* null pointer, bad index */
  BINEQ_ERR_NOT_CONVERGED = 4, /* root finder gave up */
  BINEQ_ERR_UNBOUNDED = 5,     /* ratio denominator vanishes on the circle */
  BINEQ_ERR_INTERNAL = 6
} bineq_status;

typedef struct bineq_complex {
  double re;
  double im;
} bineq_complex;

typedef struct bineq_circle_probe {
  double radius;
  double value;
  double witness_angle;
  double certified_error;
  int samples_used;
} bineq_circle_probe;

/* Message for the last failing call on this thread; empty after success. */
BINEQ_API const char* bineq_last_error(void);
/* Frees any char* returned through an out-parameter. */
BINEQ_API void bineq_string_free(char* s);
BINEQ_API const char* bineq_version(void);
BINEQ_API const char* bineq_status_name(bineq_status s);

/* Polynomials. coeffs are ascending; count = degree + 1. */
BINEQ_API bineq_status bineq_poly_create(const bineq_complex* coeffs, size_t count,
                                         bineq_poly** out);
BINEQ_API bineq_status bineq_poly_from_json(const char* json, bineq_poly** out);
BINEQ_API bineq_status bineq_poly_to_json(const bineq_poly* p, char** out);
BINEQ_API void bineq_poly_destroy(bineq_poly* p);
BINEQ_API bineq_status bineq_poly_degree(const bineq_poly* p, int* out);
BINEQ_API bineq_status bineq_poly_coeff(const bineq_poly* p, int k, bineq_complex* out);
BINEQ_API bineq_status bineq_poly_eval(const bineq_poly* p, bineq_complex z, bineq_complex* out);
BINEQ_API bineq_status bineq_poly_derivative(const bineq_poly* p, bineq_poly** out);
BINEQ_API bineq_status bineq_poly_reciprocal(const bineq_poly* p, bineq_poly** out);
BINEQ_API bineq_status bineq_poly_dilate(const bineq_poly* p, double radius, bineq_poly** out);

/* Operator parameters (n, lambda0, lambda1, lambda2). */
BINEQ_API bineq_status bineq_params_create(int n, bineq_complex l0, bineq_complex l1,
                                           bineq_complex l2, bineq_params** out);
BINEQ_API bineq_status bineq_params_from_json(const char* json, bineq_params** out);
BINEQ_API void bineq_params_destroy(bineq_params* params);
/* tol <= 0 selects the default slack. */
BINEQ_API bineq_status bineq_params_is_admissible(const bineq_params* params, double tol,
                                                  int* admissible);
BINEQ_API bineq_status bineq_params_phi(const bineq_params* params, bineq_complex* out);
BINEQ_API bineq_status bineq_apply_b(const bineq_params* params, const bineq_poly* p,
                                     bineq_poly** out);

/* samples = 0 selects the default grid. */
BINEQ_API bineq_status bineq_max_modulus(const bineq_poly* p, double radius, int samples,
                                         bineq_circle_probe* out);
BINEQ_API bineq_status bineq_min_modulus(const bineq_poly* p, double radius, int samples,
                                         bineq_circle_probe* out);
BINEQ_API bineq_status bineq_roots_json(const bineq_poly* p, char** out);

/* Request: {"statement", "poly", "params", "alpha", "beta", "R", "r", "k", "gates"}. */
BINEQ_API bineq_status bineq_check_json(const char* request, char** report);
BINEQ_API bineq_status bineq_tightness_json(const char* request, char** out);
/* Request: {"poly", "alpha", "beta", "R", "r"}. */
BINEQ_API bineq_status bineq_crosscheck_json(const char* request, char** out);

/* Full verification suite. config may be NULL for the defaults; seed_override
 * may be NULL. exit_class is 0 on a clean run and 1 on any violation. Every
 * out-pointer except summary may be NULL. */
BINEQ_API bineq_status bineq_run_suite(const char* config, const uint64_t* seed_override,
                                       char** summary, char** reports_jsonl, int* exit_class,
                                       double* wall_seconds);
/* Parameter scan; config may be NULL for the defaults. */
BINEQ_API bineq_status bineq_scan(const char* config, char** csv);

#ifdef __cplusplus
}
#endif

#endif
