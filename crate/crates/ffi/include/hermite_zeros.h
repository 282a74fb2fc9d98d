/* C interface to the hermite-zeros library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum HzStatus {
  HZ_STATUS_OK = 0,
  // A required pointer argument was null.
  HZ_STATUS_NULL_ARGUMENT = 1,
  // An input lay outside the documented domain.
  HZ_STATUS_DOMAIN_ERROR = 2,
  // A center-out zero index was out of range for the degree.
  HZ_STATUS_INDEX_ERROR = 3,
  // An iteration failed to converge (a defect for valid inputs).
  HZ_STATUS_CONVERGENCE_ERROR = 4,
} HzStatus;

// Zero construction method selector.
typedef enum HzMethod {
  HZ_METHOD_ASYMPTOTIC = 0,
  HZ_METHOD_EXACT = 1,
} HzMethod;

// Node source selector for quadrature rules.
typedef enum HzNodeSource {
  HZ_NODE_SOURCE_EXACT_NODES = 0,
  HZ_NODE_SOURCE_ASYMPTOTIC_NODES = 1,
} HzNodeSource;

// Opaque Gauss-Hermite quadrature rule.
typedef struct HzQuadratureRule HzQuadratureRule;

// Opaque sorted zero set of one Hermite degree.
typedef struct HzZeroSet HzZeroSet;

// One approximate zero with its construction data.
typedef struct HzZeroEstimate {
  uint32_t n;
  uint32_t j;
  // Area measure fed to the segment equation.
  double m;
  // Segment angle solving `theta + sin(theta) = m`.
  double theta;
  // Estimated abscissa.
  double x;
} HzZeroEstimate;

// Integrand callback: receives the abscissa and the caller's context.
typedef double (*HzIntegrand)(double x, void *context);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Forward segment map `theta + sin(theta)` for `theta` in `[0, pi]`.
//
// # Safety
// `out` must be a valid pointer to a double.
enum HzStatus hz_segment_area(double theta, double *out);

// Solves `theta + sin(theta) = m` for `theta` in `[0, pi]`.
//
// # Safety
// `out_theta` must be a valid pointer to a double.
enum HzStatus hz_invert_segment_area(double m, double *out_theta);

// Area measure of the `j`-th partition boundary for degree `n`.
//
// # Safety
// `out` must be a valid pointer to a double.
enum HzStatus hz_area_fraction(uint32_t n, uint32_t j, double *out);

// Computes the `j`-th approximate nonnegative zero of `H_n`.
//
// # Safety
// `out` must be a valid pointer to an `HzZeroEstimate`.
enum HzStatus hz_approx_positive_zero(uint32_t n, uint32_t j, struct HzZeroEstimate *out);

// Evaluates the orthonormal Hermite function `psi_n` and `psi_{n-1}`.
//
// # Safety
// `out_psi_n` and `out_psi_prev` must be valid pointers to doubles.
enum HzStatus hz_eval_hermite_function(uint32_t n,
                                       double x,
                                       double *out_psi_n,
                                       double *out_psi_prev);

// Builds the zero set of `H_n` with the requested method.
//
// On success `*out` owns the set; release it with [`hz_zero_set_free`].
//
// # Safety
// `out` must be a valid pointer to a set handle.
enum HzStatus hz_zero_set_new(uint32_t n, enum HzMethod method, struct HzZeroSet **out);

// Number of zeros in the set (equals the degree).
//
// # Safety
// `set` must be a live handle from [`hz_zero_set_new`] or null.
size_t hz_zero_set_len(const struct HzZeroSet *set);

// Copies the sorted zeros into `buf`, which holds `len` doubles.
//
// `len` must be at least [`hz_zero_set_len`].
//
// # Safety
// `buf` must point to writable storage for `len` doubles.
enum HzStatus hz_zero_set_values(const struct HzZeroSet *set, double *buf, size_t len);

// Releases a zero set handle. Null is a no-op.
//
// # Safety
// `set` must be a handle from [`hz_zero_set_new`] not yet freed, or null.
void hz_zero_set_free(struct HzZeroSet *set);

// Builds an `n`-point Gauss-Hermite rule from the requested node source.
//
// On success `*out` owns the rule; release it with [`hz_rule_free`].
//
// # Safety
// `out` must be a valid pointer to a rule handle.
enum HzStatus hz_rule_new(uint32_t n, enum HzNodeSource source, struct HzQuadratureRule **out);

// Number of nodes in the rule.
//
// # Safety
// `rule` must be a live handle from [`hz_rule_new`] or null.
size_t hz_rule_len(const struct HzQuadratureRule *rule);

// Copies the sorted nodes into `buf` holding `len` doubles.
//
// # Safety
// `buf` must point to writable storage for `len` doubles.
enum HzStatus hz_rule_nodes(const struct HzQuadratureRule *rule, double *buf, size_t len);

// Copies the weights (matching node order) into `buf` holding `len` doubles.
//
// # Safety
// `buf` must point to writable storage for `len` doubles.
enum HzStatus hz_rule_weights(const struct HzQuadratureRule *rule, double *buf, size_t len);

// Evaluates `sum w_j f(x_j)` with `f` supplied as a callback.
//
// # Safety
// `f` must be callable with any node abscissa and `context`; `out` must be a
// valid pointer to a double.
enum HzStatus hz_rule_integrate(const struct HzQuadratureRule *rule,
                                HzIntegrand f,
                                void *context,
                                double *out);

// Releases a rule handle. Null is a no-op.
//
// # Safety
// `rule` must be a handle from [`hz_rule_new`] not yet freed, or null.
void hz_rule_free(struct HzQuadratureRule *rule);

// Analytic Gaussian moment `int x^k exp(-x^2) dx`.
//
// # Safety
// `out` must be a valid pointer to a double.
enum HzStatus hz_gaussian_moment(uint32_t k, double *out);

// Radius `sqrt(4S + 1)` of the spin-`S` position-space disk.
//
// The cell boundaries are the asymptotic zero set of degree `2S`; fetch them
// with [`hz_zero_set_new`].
//
// # Safety
// `out` must be a valid pointer to a double.
enum HzStatus hz_spin_radius(double s, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
