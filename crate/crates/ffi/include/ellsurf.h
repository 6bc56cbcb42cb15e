#ifndef ELLSURF_H
#define ELLSURF_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. 0 to 3 match the exit codes of the command-line tool.
typedef enum EllsurfStatus {
  ELLSURF_STATUS_OK = 0,
  // The computation is undefined for this input (e.g. a 2-torsion section).
  ELLSURF_STATUS_DOMAIN_ERROR = 1,
  // Malformed polynomial, unsupported prime, degenerate surface.
  ELLSURF_STATUS_INPUT_ERROR = 2,
  ELLSURF_STATUS_INTERNAL_ERROR = 3,
  // A required pointer was null or a string was not UTF-8.
  ELLSURF_STATUS_INVALID_ARGUMENT = 4,
  // A panic was caught at the boundary.
  ELLSURF_STATUS_PANIC = 5,
} EllsurfStatus;

// Opaque surface handle.
typedef struct EllsurfSurface EllsurfSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `a4` and `a6` (polynomials in `t`) and builds the minimal model.
//
// # Safety
// `a4` and `a6` must be null or NUL-terminated strings; `out` must be null
// or valid for a write.
enum EllsurfStatus ellsurf_surface_new(const char *a4, const char *a6, struct EllsurfSurface **out);

// Releases a surface. Null is ignored.
//
// # Safety
// `s` must be null or a handle from [`ellsurf_surface_new`] not yet freed.
void ellsurf_surface_free(struct EllsurfSurface *s);

// The integer `d` of the minimal model.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_surface_degree(const struct EllsurfSurface *s, uint32_t *out);

// Sum of the Euler numbers of the singular fibres.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_euler_sum(const struct EllsurfSurface *s, uint64_t *out);

// Whether `p` passes the good-reduction check.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_check_star(const struct EllsurfSurface *s, uint64_t p, bool *out);

// Whether `p` is in the certified bad-prime set.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_is_bad_prime(const struct EllsurfSurface *s, uint64_t p, bool *out);

// JSON report of the `analyze` command.
//
// The report is written to `out` whenever the status is 0 to 3.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_analyze_json(const struct EllsurfSurface *s, char **out);

// JSON report of the `sections` command. Negative degree bounds select the defaults.
//
// # Safety
// `s` must be a live handle or null; `out` must be null or writable.
enum EllsurfStatus ellsurf_sections_json(const struct EllsurfSurface *s,
                                         uint64_t p,
                                         int32_t num_deg,
                                         int32_t den_deg,
                                         char **out);

// JSON report of the `cover` command for the section with x-coordinate `x`.
// `lambda_max` of 0 selects the default.
//
// # Safety
// `s` must be a live handle or null; `x` a NUL-terminated string or null
// (null reports a missing x-coordinate);
// `out` must be null or writable.
enum EllsurfStatus ellsurf_cover_json(const struct EllsurfSurface *s,
                                      uint64_t p,
                                      const char *x,
                                      uint64_t lambda_max,
                                      bool force,
                                      char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `p` must be null or a string from this library not yet freed.
void ellsurf_string_free(char *p);

// Message for the last failure on this thread, or null. Valid until the
// next call into the library on the same thread; do not free.
const char *ellsurf_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ELLSURF_H */
