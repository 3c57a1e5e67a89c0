#ifndef EXPSUM_EXPSUM_H
#define EXPSUM_EXPSUM_H

/* C interface to the exponential partial-sum zero library.
 *
 * The library studies the rescaled partial sums p_{n-1}(nz) of e^z: their
 * n-1 zeros, the limit curve those zeros accumulate on, the contour-integral
 * transform F_n whose phase controls them, and the asymptotic expansions that
 * locate each zero to certified accuracy.
 *
 * All functions return ex_status; EX_OK means the out-parameters are valid.
 * On failure a thread-local message is available via ex_last_error().
 * Every operation is deterministic for fixed inputs and thread-safe.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EXPSUM_BUILD)
#    define EXPSUM_API __declspec(dllexport)
#  else
#    define EXPSUM_API __declspec(dllimport)
#  endif
#else
#  if defined(EXPSUM_BUILD)
#    define EXPSUM_API __attribute__((visibility("default")))
#  else
#    define EXPSUM_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
  double re;
  double im;
} ex_complex;

/* Mirrors the library's internal status categories one-to-one. */
typedef enum {
  EX_OK = 0,
  EX_DOMAIN_ERROR = 1,       /* argument outside the operation's domain */
  EX_CONVERGENCE_ERROR = 2,  /* iteration failed to reach its residual target */
  EX_PROXIMITY_ERROR = 3,    /* evaluation point too close to the contour */
  EX_QUADRATURE_ERROR = 4,   /* quadrature error estimate above target */
  EX_VALIDATION_ERROR = 5,   /* contour admissibility check failed */
  EX_AMBIGUITY_ERROR = 6,    /* zero matching could not be made unique */
  EX_COLLISION_ERROR = 7,    /* two indices converged to the same zero */
  EX_UNSUPPORTED_ORDER = 8,  /* expansion order beyond certified coefficients */
  EX_JUMP_LOCUS_ERROR = 9,   /* evaluation on a discontinuity without a side */
  EX_USAGE_ERROR = 10,       /* malformed request */
} ex_status;

/* Stable lower-case name of a status code ("ok", "domain_error", ...). */
EXPSUM_API const char* ex_status_name(ex_status s);

/* Message describing the most recent failure on this thread; empty string
 * if the last call succeeded.  The pointer stays valid until the next
 * library call on the same thread. */
EXPSUM_API const char* ex_last_error(void);

/* Library version string ("major.minor.patch"). */
EXPSUM_API const char* ex_version(void);

/* Caps internal parallelism; 0 restores the default (hardware concurrency,
 * further capped by the SZ_THREADS environment variable). */
EXPSUM_API void ex_set_max_threads(int n);

/* ------------------------------------------------------------------ */
/* Phase function and curves                                          */
/* ------------------------------------------------------------------ */

/* phi(z) = z - 1 - ln z and its derivative 1 - 1/z.  continued_branch = 0
 * takes the principal log (Im in (-pi, pi]); nonzero selects the branch
 * with Im ln z in (0, 2 pi), continuous across the negative axis from
 * above, which indexes the zeros.  Either out-pointer may be NULL. */
EXPSUM_API ex_status ex_phase_eval(ex_complex z, int continued_branch,
                                   ex_complex* phi, ex_complex* dphi);

typedef struct {
  double theta; /* polar angle, radians */
  double r;     /* modulus */
  ex_complex z; /* r e^{i theta} */
} ex_curve_sample;

/* Point of the limit curve {|z| <= 1 : |z e^{1-z}| = 1} at polar angle
 * theta in [-pi, pi]. */
EXPSUM_API ex_status ex_szego_point(double theta, ex_curve_sample* out);

/* Point of the steepest-descent path r = theta/sin(theta) through z = 1,
 * theta in (-pi, pi). */
EXPSUM_API ex_status ex_descent_point(double theta, ex_curve_sample* out);

/* Distance from z to the limit curve. */
EXPSUM_API ex_status ex_szego_distance(ex_complex z, double* out);

/* ------------------------------------------------------------------ */
/* Special functions and the partial sum                              */
/* ------------------------------------------------------------------ */

/* k-th zero of the complementary error function in the second quadrant,
 * ordered by modulus (k >= 1), with the certified residual |erfc(w)| scaled
 * by |e^{-w^2}|.  residual may be NULL. */
EXPSUM_API ex_status ex_erfc_zero(int k, ex_complex* w, double* residual);

/* Scaled partial sum S(z) = (ez)^{-n} p_{n-1}(nz) and its derivative,
 * evaluated by cancellation-safe routes; 1 <= n <= 2000, z != 0.
 * Either out-pointer may be NULL. */
EXPSUM_API ex_status ex_partial_sum(int n, ex_complex z, ex_complex* value,
                                    ex_complex* deriv);

/* Normalizing constant G_n: contour quadrature value against the closed
 * form e^{-n} n^{n-1}/(n-1)!.  quadrature_value keeps the (tiny) imaginary
 * quadrature defect; 1 <= n <= 400.  Any out-pointer may be NULL. */
EXPSUM_API ex_status ex_stirling(int n, ex_complex* quadrature_value,
                                 double* check_value, double* discrepancy);

/* ------------------------------------------------------------------ */
/* The transform F_n                                                  */
/* ------------------------------------------------------------------ */

typedef enum {
  EX_FN_QUADRATURE = 0,   /* adaptive contour quadrature (n <= 400) */
  EX_FN_RESIDUE = 1,      /* exact residue route through the partial sum */
  EX_FN_PARAMETRIX = 2,   /* local parametrix, |z-1| <= 0.5 */
  EX_FN_LOCAL = 3,        /* local expansion, |z-1| <= 0.1, order_r = 1 */
  EX_FN_OUTER = 4,        /* outer expansion, order_r in {1, 2} */
} ex_fn_method;

/* F_n(z) by the chosen route.  order_r is consulted only by the expansion
 * methods.  The default integration contour (descent arc closed by the
 * circle |z| = pi/2) fixes interior/exterior automatically from z; points
 * on the contour itself are rejected with EX_PROXIMITY_ERROR (quadrature
 * enforces a wider guard ring than the exact routes).  error_estimate is
 * the quadrature's own estimate, 0 for the exact route, and the a-priori
 * remainder scale for the expansions; it may be NULL. */
EXPSUM_API ex_status ex_fn_eval(int n, ex_complex z, ex_fn_method method,
                                int order_r, ex_complex* value,
                                double* error_estimate);

/* ------------------------------------------------------------------ */
/* Zeros of the partial sum                                           */
/* ------------------------------------------------------------------ */

typedef enum {
  EX_ZEROS_ORACLE = 0,           /* simultaneous root finder, all n-1 zeros */
  EX_ZEROS_SZEGO_ALPHA = 1,      /* limit-curve point at the k-th index */
  EX_ZEROS_REFINED_ALPHA = 2,    /* curve equation with transform correction */
  EX_ZEROS_CRITICAL_ALPHA = 3,   /* conformal image of the k-th erfc zero */
  EX_ZEROS_CURVE_EXPANSION = 4,  /* curve-based series, r in {1, 2, 3} */
  EX_ZEROS_SADDLE_EXPANSION = 5, /* saddle-based series, r in {2, 3, 4} */
  EX_ZEROS_NEWTON = 6,           /* certified per-index solve */
} ex_zero_method;

/* Stable method name ("oracle", "newton_solve", ...); NULL for unknown. */
EXPSUM_API const char* ex_zero_method_name(ex_zero_method m);

/* Inverse of ex_zero_method_name; returns -1 for an unknown name. */
EXPSUM_API int ex_zero_method_parse(const char* name);

typedef struct {
  int k;               /* index, 1..n-1, counted down from the saddle */
  int n;               /* degree parameter */
  ex_complex value;    /* the (approximate) zero of p_{n-1}(nz) */
  int method;          /* ex_zero_method that produced it */
  int order_r;         /* expansion order, 0 when not applicable */
  double residual;     /* |scaled partial sum| at value */
  double error_bound;  /* certified |value - true zero| bound; 0 = none */
} ex_zero;

typedef struct ex_zero_list ex_zero_list;

/* Zeros (or zero approximations) of p_{n-1}(nz) for k in [k_lo, k_hi] by
 * the chosen method.  k_lo = 0 selects the method's full default range:
 * 1..n-1 for oracle and newton_solve; the upper half 1..floor(n/2) for the
 * curve/saddle families (their lower-half partners are conjugates); for
 * critical_alpha, the prefix of indices inside the conformal trust radius.
 * order_r is consulted only by the expansion methods.  The caller owns
 * the returned list. */
EXPSUM_API ex_status ex_zeros_compute(int n, int k_lo, int k_hi,
                                      ex_zero_method method, int order_r,
                                      ex_zero_list** out);

EXPSUM_API size_t ex_zero_list_size(const ex_zero_list* list);
EXPSUM_API ex_status ex_zero_list_get(const ex_zero_list* list, size_t index,
                                      ex_zero* out);
EXPSUM_API void ex_zero_list_free(ex_zero_list* list);

/* Nearest-neighbor matching of a predicted zero list against a reference
 * list (|predicted| <= |reference|).  Every prediction must fall within
 * half the reference set's minimum spacing of its partner, else
 * EX_AMBIGUITY_ERROR.  to_reference and distance, when non-NULL, must hold
 * ex_zero_list_size(predicted) entries; max_distance and min_gap may be
 * NULL. */
EXPSUM_API ex_status ex_match_zeros(const ex_zero_list* predicted,
                                    const ex_zero_list* reference,
                                    int* to_reference, double* distance,
                                    double* max_distance, double* min_gap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EXPSUM_EXPSUM_H */
