#ifndef WREATH_SPECHT_H
#define WREATH_SPECHT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WsStatus {
  WS_STATUS_OK = 0,
  WS_STATUS_NULL_POINTER = 1,
  WS_STATUS_INVALID_UTF8 = 2,
  WS_STATUS_PARSE_ERROR = 3,
  WS_STATUS_INVALID_INPUT = 4,
  WS_STATUS_SIZE_MISMATCH = 5,
  WS_STATUS_OVERFLOW = 6,
  WS_STATUS_OUT_OF_RANGE = 7,
  WS_STATUS_PANIC = 8,
} WsStatus;

/**
 * A branching result: multiplicities indexed by multipartitions, listed in
 * descending lexicographic order of their flattened parts.
 */
typedef struct WsMultiplicityMap WsMultiplicityMap;

/**
 * Message describing the last failure on this thread, or null if the last
 * call succeeded. The caller owns the returned string.
 */
char *ws_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void ws_string_free(char *s);

/**
 * Dimension of the Specht module of a partition.
 *
 * # Safety
 * `partition` must be a NUL-terminated string; `out` must be writable.
 */
enum WsStatus ws_specht_dimension(const char *partition, uint64_t *out);

/**
 * Littlewood-Richardson coefficient `c^lambda_{alpha,beta}`.
 *
 * # Safety
 * The strings must be NUL-terminated; `out` must be writable.
 */
enum WsStatus ws_lr_coefficient(const char *lambda,
                                const char *alpha,
                                const char *beta,
                                uint64_t *out);

/**
 * Generalized coefficient `c(lambda; parts)`, with `parts` a `;`-separated
 * list of partitions such as `"[2,1];[1]"`.
 *
 * # Safety
 * The strings must be NUL-terminated; `out` must be writable.
 */
enum WsStatus ws_lr_multi(const char *lambda, const char *parts, uint64_t *out);

/**
 * Dimension of the Specht module of `S_m wr S_n` indexed by `lambda`.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `out` must be writable.
 */
enum WsStatus ws_wreath_dimension(size_t m, const char *lambda, uint64_t *out);

/**
 * Restriction from `S_m wr S_n` to `S_{m-1} wr S_n`. On success `*out`
 * holds a new handle.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `out` must be writable.
 */
enum WsStatus ws_branch_first(size_t m, const char *lambda, struct WsMultiplicityMap **out);

/**
 * Restriction from `S_m wr S_n` to `S_m wr S_{n-1}`. On success `*out`
 * holds a new handle.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `out` must be writable.
 */
enum WsStatus ws_branch_second(size_t m, const char *lambda, struct WsMultiplicityMap **out);

/**
 * Number of entries with non-zero multiplicity; 0 for a null handle.
 *
 * # Safety
 * `map` must be null or a live handle.
 */
size_t ws_map_len(const struct WsMultiplicityMap *map);

/**
 * Multiplicity of entry `index`.
 *
 * # Safety
 * `map` must be a live handle; `out` must be writable.
 */
enum WsStatus ws_map_multiplicity(const struct WsMultiplicityMap *map, size_t index, uint64_t *out);

/**
 * Multipartition of entry `index` as JSON. The caller owns `*out`.
 *
 * # Safety
 * `map` must be a live handle; `out` must be writable.
 */
enum WsStatus ws_map_key_json(const struct WsMultiplicityMap *map, size_t index, char **out);

/**
 * Multiplicity of the multipartition `nu` (JSON), zero if absent.
 *
 * # Safety
 * `map` must be a live handle, `nu` NUL-terminated, `out` writable.
 */
enum WsStatus ws_map_get(const struct WsMultiplicityMap *map, const char *nu, uint64_t *out);

/**
 * The whole result as a JSON document with fields `m`, `n`, `rule`,
 * `lambda` and `multiplicities`. The caller owns `*out`.
 *
 * # Safety
 * `map` must be a live handle; `out` must be writable.
 */
enum WsStatus ws_map_to_json(const struct WsMultiplicityMap *map, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `map` must be null or a handle from this library not yet freed.
 */
void ws_map_free(struct WsMultiplicityMap *map);

#endif  /* WREATH_SPECHT_H */
