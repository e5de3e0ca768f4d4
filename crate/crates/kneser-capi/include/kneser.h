/* C interface to the kneser exact-geometry library. */

#ifndef KNESER_H
#define KNESER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code returned by every fallible entry point. `OK` is zero, so the
 * type can be tested like an error flag.
 */
typedef enum KneserStatus {
  KNESER_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  KNESER_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  KNESER_STATUS_UTF8 = 2,
  /**
   * Input text could not be parsed (JSON, rationals, method names).
   */
  KNESER_STATUS_PARSE = 3,
  /**
   * Structurally valid input outside the function's domain
   * (bad labels, parameter ranges, degenerate configurations).
   */
  KNESER_STATUS_DOMAIN = 4,
  /**
   * Invariant violation inside the library.
   */
  KNESER_STATUS_INTERNAL = 5,
} KneserStatus;

/**
 * Opaque handle around a point configuration.
 */
typedef struct KneserConfig KneserConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if no call
 * has failed yet. The pointer stays valid until the next failing call on
 * the same thread; do not free it.
 */
const char *kneser_last_error(void);

/**
 * Releases a string allocated by this library. Null is ignored.
 *
 * # Safety
 * `s` must be a pointer previously returned through an `out_json`
 * parameter of this library and not yet freed.
 */
void kneser_string_free(char *s);

/**
 * Parses a point configuration from its JSON form
 * (`{"dim": d, "points": [["x1", "x2", ...], ...]}`, coordinates as exact
 * rational strings or integers). Duplicate points are rejected.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid location
 * to store the new handle.
 */
enum KneserStatus kneser_config_from_json(const char *json, struct KneserConfig **out);

/**
 * Builds the configuration of `n` moment-curve points
 * gamma(t) = (t, t^2, ..., t^d) at t = 1..n.
 *
 * # Safety
 * `out` must be a valid location to store the new handle.
 */
enum KneserStatus kneser_moment_curve(size_t n, size_t d, struct KneserConfig **out);

/**
 * Releases a configuration handle. Null is ignored.
 *
 * # Safety
 * `config` must come from this library and not have been freed already.
 */
void kneser_config_free(struct KneserConfig *config);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `config`, when non-null, must be a live handle from this library.
 */
size_t kneser_config_len(const struct KneserConfig *config);

/**
 * Ambient dimension, or 0 for a null handle.
 *
 * # Safety
 * `config`, when non-null, must be a live handle from this library.
 */
size_t kneser_config_dim(const struct KneserConfig *config);

/**
 * Serializes a configuration back to the JSON form accepted by
 * [`kneser_config_from_json`].
 *
 * # Safety
 * `config` must be a live handle; `out_json` a valid output location.
 */
enum KneserStatus kneser_config_to_json(const struct KneserConfig *config, char **out_json);

/**
 * Whether every min(n, d+1)-subset of the configuration is affinely
 * independent.
 *
 * # Safety
 * `config` must be a live handle; `out` a valid output location.
 */
enum KneserStatus kneser_general_position(const struct KneserConfig *config, bool *out);

/**
 * Radon partition of a configuration of exactly d+2 points. The result
 * JSON holds the partition (1-based labels, exact coefficients) and the
 * common point of the two hulls:
 * `{"partition": {"positive": [...], "negative": [...],
 * "coefficients": {...}}, "radon_point": [...]}`.
 *
 * # Safety
 * `config` must be a live handle; `out_json` a valid output location.
 */
enum KneserStatus kneser_radon_json(const struct KneserConfig *config, char **out_json);

/**
 * Tests whether aff(T) meets the convex hull of every k-subset of the
 * configuration. `t_indices` are 1-based point labels, `t_len` of them.
 * The certificate JSON records `verified` and, on failure, the
 * lexicographically first failing k-set.
 *
 * # Safety
 * `config` must be a live handle, `t_indices` must point to `t_len`
 * readable entries, and `out_json` must be a valid output location.
 */
enum KneserStatus kneser_check_transversal_json(const struct KneserConfig *config,
                                                const size_t *t_indices,
                                                size_t t_len,
                                                size_t k,
                                                char **out_json);

/**
 * Largest number of cyclic-polytope vertices for which some vertex
 * configuration admits a complete Kneser transversal for k-sets, searched
 * exhaustively in the non-trivial range (lambda - 1 < ceil(d/2)); one more
 * vertex makes every configuration fail. `method` is one of
 * "gap-optimizer", "sign-oracle", "both-agree", or null for "both-agree";
 * `oracle_cap` bounds the point count the sign oracle will enumerate
 * (0 selects the default of 24). Result JSON:
 * `{"k", "d", "lambda", "zeta", "witness_gaps", "method", "z_lower",
 * "z_upper"}`.
 *
 * # Safety
 * `method`, when non-null, must be a valid NUL-terminated string;
 * `out_json` must be a valid output location.
 */
enum KneserStatus kneser_zeta_json(size_t k,
                                   size_t d,
                                   size_t lambda,
                                   const char *method,
                                   size_t oracle_cap,
                                   char **out_json);

/**
 * zeta(k, d, lambda) = d - lambda + k in the trivial range
 * (lambda - 1 >= ceil(d/2)); fails outside it or when k <= lambda.
 *
 * # Safety
 * `out` must be a valid output location.
 */
enum KneserStatus kneser_zeta_trivial(size_t k, size_t d, size_t lambda, size_t *out);

/**
 * Closed-form bounds z(k, d, lambda) <= zeta <= Z(k, d, lambda) for the
 * non-trivial range.
 *
 * # Safety
 * `out_lower` and `out_upper` must be valid output locations.
 */
enum KneserStatus kneser_z_bounds(size_t k,
                                  size_t d,
                                  size_t lambda,
                                  size_t *out_lower,
                                  size_t *out_upper);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNESER_H */
