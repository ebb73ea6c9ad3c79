#ifndef TRIMETRIC_H
#define TRIMETRIC_H

/* Generated from the trimetric-capi Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct TrmDomain TrmDomain;

/**
 * Status code of every fallible call.
 */
typedef enum TrmStatus {
  /**
   * Success; outputs are valid.
   */
  TRM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TRM_STATUS_NULL_POINTER = 1,
  /**
   * A point lies outside (or on the boundary of) the domain.
   */
  TRM_STATUS_POINT_NOT_IN_DOMAIN = 2,
  /**
   * The two points coincide where a distinct pair is required.
   */
  TRM_STATUS_DEGENERATE_INPUT = 3,
  /**
   * A scalar or structural argument is out of range (exponent,
   * dilatation, radius, vertex list, ...).
   */
  TRM_STATUS_INVALID_ARGUMENT = 4,
  /**
   * A geometric precondition failed (ball not contained, pair collinear
   * with the origin where forbidden, ...).
   */
  TRM_STATUS_PRECONDITION_FAILED = 5,
  /**
   * The operation is not defined on this domain.
   */
  TRM_STATUS_UNSUPPORTED = 6,
} TrmStatus;

/**
 * A point of the complex plane.
 */
typedef struct TrmPoint {
  double re;
  double im;
} TrmPoint;

/**
 * Two-sided bounds for s from the Euclidean midpoint rotation.
 */
typedef struct TrmEuclideanBounds {
  /**
   * s at the equal-modulus rotated pair; always a lower bound.
   */
  double lower;
  /**
   * Weaker algebraic lower bound |x-y| / hypot(2 - |x+y|, |x-y|).
   */
  double lower_closed;
  /**
   * s at the radial rotated pair; meaningful only when `has_upper`.
   */
  double upper;
  /**
   * True when the radial pair stays inside the disk, making `upper` a
   * valid (tight) upper bound.
   */
  bool has_upper;
  /**
   * Closed-form upper bound |x-y| / (2 - |x+y|); always valid.
   */
  double upper_closed;
} TrmEuclideanBounds;

/**
 * Two-sided bounds for s from the hyperbolic midpoint rotation.
 */
typedef struct TrmHyperbolicBounds {
  double lower;
  double upper;
} TrmHyperbolicBounds;

/**
 * Holder continuity bounds for K-quasiconformal self-maps of the disk.
 */
typedef struct TrmHolderBounds {
  /**
   * Maximal dilatation the bounds apply to.
   */
  double k;
  /**
   * Triangular ratio s(x, y).
   */
  double s;
  /**
   * Main bound 2^{3-1/K} (s/(1+s^2))^{1/K}.
   */
  double thm_main;
  /**
   * Point-pair-metric variant; always valid.
   */
  double cor_p;
  /**
   * Aligned variant; a proven bound only when `collinear_valid`.
   */
  double cor_collinear;
  /**
   * True while the aligned estimate |x-y|/(2-|x+y|) stays within [0, 1].
   */
  bool collinear_valid;
  /**
   * Hyperbolic-rotation variant; always valid.
   */
  double cor_hyp;
  /**
   * Radial variant; meaningful only when `has_radial`.
   */
  double cor_radial;
  bool has_radial;
  /**
   * Chord variant; meaningful only when `has_unit`.
   */
  double cor_unit;
  bool has_unit;
  /**
   * Minimum of the valid present bounds.
   */
  double best;
  /**
   * True when even `best` exceeds the disk diameter 2.
   */
  bool vacuous;
} TrmHolderBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *trm_version(void);

/**
 * Static human-readable description of a status code.
 */
const char *trm_status_message(enum TrmStatus status);

/**
 * The open unit disk.
 */
TrmDomain *trm_domain_unit_disk(void);

/**
 * The upper half-plane Im z > 0.
 */
TrmDomain *trm_domain_upper_half_plane(void);

/**
 * The unit disk with the origin removed.
 */
TrmDomain *trm_domain_punctured_unit_disk(void);

/**
 * The plane with one point removed.
 */
TrmDomain *trm_domain_point_complement(struct TrmPoint z0);

/**
 * A bounded convex polygon from `len >= 3` vertices (either orientation,
 * no repeats, strictly convex). Writes the handle to `out` on success.
 *
 * # Safety
 * `vertices` must point to `len` readable `TrmPoint`s; `out` must be
 * writable.
 */
enum TrmStatus trm_domain_convex_polygon(const struct TrmPoint *vertices,
                                         size_t len,
                                         TrmDomain **out);

/**
 * Releases a domain handle. Null is ignored.
 *
 * # Safety
 * `domain` must be null or a handle obtained from a `trm_domain_*`
 * constructor, not yet freed.
 */
void trm_domain_free(TrmDomain *domain);

/**
 * Whether `z` lies strictly inside the domain. Never fails besides null
 * arguments.
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_domain_contains(const TrmDomain *domain, struct TrmPoint z, bool *out);

/**
 * Triangular ratio metric s(x, y) = |x-y| / inf_z(|x-z| + |z-y|), infimum
 * over boundary points z.
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_s_metric(const TrmDomain *domain,
                            struct TrmPoint x,
                            struct TrmPoint y,
                            double *out);

/**
 * j* metric |x-y| / (|x-y| + 2 min(d(x), d(y))).
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_jstar(const TrmDomain *domain,
                         struct TrmPoint x,
                         struct TrmPoint y,
                         double *out);

/**
 * Point-pair metric p(x, y) = |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_point_pair(const TrmDomain *domain,
                              struct TrmPoint x,
                              struct TrmPoint y,
                              double *out);

/**
 * Barrlund metric b_p(x, y) = sup_z |x-y| / (|x-z|^p + |z-y|^p)^{1/p},
 * supremum over boundary points z; requires p >= 1.
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_barrlund(const TrmDomain *domain,
                            double p,
                            struct TrmPoint x,
                            struct TrmPoint y,
                            double *out);

/**
 * The low metric of the punctured unit disk,
 * |x-y| / min(|x - y/|y|^2|, |x/|x|^2 - y|); both points must lie in the
 * punctured disk.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_low(struct TrmPoint x, struct TrmPoint y, double *out);

/**
 * Hyperbolic distance of the unit disk.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_rho_disk(struct TrmPoint x, struct TrmPoint y, double *out);

/**
 * Hyperbolic distance of the upper half-plane.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_rho_half_plane(struct TrmPoint x, struct TrmPoint y, double *out);

/**
 * s-diameter of the metric ball B(center, radius) contained in the domain:
 * the supremum of s over its point pairs.
 *
 * # Safety
 * `domain` must be a live handle; `out` must be writable.
 */
enum TrmStatus trm_ball_s_diameter(const TrmDomain *domain,
                                   struct TrmPoint center,
                                   double radius,
                                   double *out);

/**
 * Euclidean midpoint-rotation bounds for s in the unit disk; requires
 * distinct interior points.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_euclidean_bounds(struct TrmPoint x,
                                    struct TrmPoint y,
                                    struct TrmEuclideanBounds *out);

/**
 * Hyperbolic midpoint-rotation bounds for s in the unit disk; requires
 * distinct interior points.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_hyperbolic_bounds(struct TrmPoint x,
                                     struct TrmPoint y,
                                     struct TrmHyperbolicBounds *out);

/**
 * Holder continuity bounds for K-quasiconformal self-maps of the unit disk
 * fixing the origin class. Pass `r = NAN` when no radius cap is intended;
 * the radial variant appears only when |x+y|/2 <= r < 1.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrmStatus trm_holder_bounds(struct TrmPoint x,
                                 struct TrmPoint y,
                                 double k,
                                 double r,
                                 struct TrmHolderBounds *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TRIMETRIC_H */
