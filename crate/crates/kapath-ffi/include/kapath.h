#ifndef KAPATH_H
#define KAPATH_H

/* This file is generated by cbindgen from the kapath-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status of a C-ABI call.
typedef enum KapathStatus {
  KapathStatus_Ok = 0,
  KapathStatus_NullPointer = 1,
  KapathStatus_InvalidUtf8 = 2,
  KapathStatus_IllegalCharacter = 3,
  KapathStatus_HorizontalForbidden = 4,
  KapathStatus_InvalidParams = 5,
  KapathStatus_MalformedColoredPath = 6,
  KapathStatus_NoUpStep = 7,
  KapathStatus_NotClosed = 8,
  KapathStatus_StructureViolation = 9,
  KapathStatus_NonIntegerResult = 10,
  KapathStatus_BudgetExceeded = 11,
  KapathStatus_InternalError = 12,
} KapathStatus;

// Claims checkable through [`kapath_verify_claim`].
typedef enum KapathClaim {
  KapathClaim_Eq4 = 0,
  KapathClaim_Eq5 = 1,
  KapathClaim_Eq6 = 2,
  KapathClaim_Eq7 = 3,
  KapathClaim_Thm1 = 4,
  KapathClaim_C1 = 5,
  KapathClaim_C2 = 6,
  KapathClaim_Narayana = 7,
  KapathClaim_Roundtrip = 8,
} KapathClaim;

// Opaque path handle.
typedef struct KapathPath KapathPath;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a word over `U`, `D`, `H` into a new path handle.
//
// # Safety
// `word` must point to a NUL-terminated string and `out` to writable
// pointer-sized storage. On success the caller owns the handle and must
// release it with [`kapath_path_free`].
enum KapathStatus kapath_path_parse(const char *word,
                                    uint32_t k,
                                    uint32_t a,
                                    struct KapathPath **out);

// Releases a path handle. NULL is ignored.
//
// # Safety
// `path` must be a handle from this library, not yet freed.
void kapath_path_free(struct KapathPath *path);

// Returns the path's word as a fresh string, or NULL on NULL input.
//
// # Safety
// `path` must be a valid handle. Free the result with
// [`kapath_string_free`].
char *kapath_path_word(const struct KapathPath *path);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must originate from this library and not have been freed already.
void kapath_string_free(char *s);

// Total x-advance of the path; 0 for NULL.
//
// # Safety
// `path` must be a valid handle or NULL.
uint64_t kapath_path_order(const struct KapathPath *path);

// Number of steps in the path; 0 for NULL.
//
// # Safety
// `path` must be a valid handle or NULL.
uint64_t kapath_path_step_count(const struct KapathPath *path);

// True iff the path ends on the x-axis.
//
// # Safety
// `path` must be a valid handle or NULL.
bool kapath_path_is_closed(const struct KapathPath *path);

// True iff the path never goes below the x-axis.
//
// # Safety
// `path` must be a valid handle or NULL.
bool kapath_path_is_nonnegative(const struct KapathPath *path);

// Number of humps; 0 for NULL.
//
// # Safety
// `path` must be a valid handle or NULL.
uint64_t kapath_path_hump_count(const struct KapathPath *path);

// Number of peaks; 0 for NULL.
//
// # Safety
// `path` must be a valid handle or NULL.
uint64_t kapath_path_peak_count(const struct KapathPath *path);

// Applies the forward bijection to the hump starting at step
// `hump_up_index`, colored by `color`. Writes the image path and, when
// `out_case` is non-NULL, the assembly case (1, 2 or 3).
//
// # Safety
// `path` must be a valid handle, `out` writable; the caller owns the new
// handle.
enum KapathStatus kapath_phi(const struct KapathPath *path,
                             uint64_t hump_up_index,
                             uint32_t color,
                             struct KapathPath **out,
                             uint32_t *out_case);

// Applies the inverse bijection to a super path with at least one up step.
// Writes the colored path and, through the optional out-pointers, the
// recovered hump's up-step index, its color, and the case.
//
// # Safety
// `path` must be a valid handle, `out` writable; the caller owns the new
// handle.
enum KapathStatus kapath_psi(const struct KapathPath *path,
                             struct KapathPath **out,
                             uint64_t *out_hump_up_index,
                             uint32_t *out_color,
                             uint32_t *out_case);

// Number of super (k,a)-paths of order `n` as a decimal string
// (0 for negative `n`).
//
// # Safety
// `out` must be writable; free the string with [`kapath_string_free`].
enum KapathStatus kapath_count_super(int64_t n, uint32_t k, uint32_t a, char **out);

// `C(n-1, m) * C(kn-1, m-1)` as a decimal string; requires `n, m >= 1`.
//
// # Safety
// `out` must be writable; free the string with [`kapath_string_free`].
enum KapathStatus kapath_count_suu(uint64_t n, uint32_t k, uint64_t m, char **out);

// `C(n-1, m-1) * C(kn-1, m-1)` as a decimal string; requires `n, m >= 1`.
//
// # Safety
// `out` must be writable; free the string with [`kapath_string_free`].
enum KapathStatus kapath_count_sud(uint64_t n, uint32_t k, uint64_t m, char **out);

// `(1/n) C(n, m) C(kn, m-1)` as a decimal string; requires `n, m >= 1`.
//
// # Safety
// `out` must be writable; free the string with [`kapath_string_free`].
enum KapathStatus kapath_count_kary_peak_paths(uint64_t n, uint32_t k, uint64_t m, char **out);

// Verifies one identity cell and writes the report as a JSON string.
//
// Grid claims (EQ4..THM1, ROUNDTRIP) read `n`, `k`, `a` and ignore `m`;
// peak-count claims (C1, C2, NARAYANA) read `n`, `k`, `m` and ignore `a`.
// Cells whose super-path universe exceeds `budget` (0 means the default of
// 10^7) are refused with `BudgetExceeded`.
//
// # Safety
// `out_report_json` must be writable; free the string with
// [`kapath_string_free`].
enum KapathStatus kapath_verify_claim(enum KapathClaim claim,
                                      uint64_t n,
                                      uint32_t k,
                                      uint32_t a,
                                      uint64_t m,
                                      uint64_t budget,
                                      char **out_report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KAPATH_H */
