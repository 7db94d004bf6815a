#ifndef PANCYC_H
#define PANCYC_H

/* Generated by cbindgen from pancyc-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a pancyc call.
 */
typedef enum pancyc_status {
  PANCYC_OK = 0,
  PANCYC_ERR_NULL_ARGUMENT = 1,
  PANCYC_ERR_INVALID_UTF8 = 2,
  PANCYC_ERR_PARSE = 3,
  /**
   * Input violates a precondition (not strong, or fewer than three parts).
   */
  PANCYC_ERR_PRECONDITION = 4,
  PANCYC_ERR_INVALID_CERTIFICATE = 5,
  PANCYC_ERR_ARC_NOT_PRESENT = 6,
  /**
   * A guarantee failed internally; report this as a bug.
   */
  PANCYC_ERR_INTERNAL = 7,
} pancyc_status;

/**
 * Opaque tournament handle.
 */
typedef struct pancyc_tournament pancyc_tournament;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Detail message of the last failing call on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread; do
 * not free it.
 */
const char *pancyc_last_error(void);

/**
 * Parse the instance text format into a new handle.
 */
enum pancyc_status pancyc_parse(const char *text, struct pancyc_tournament **out);

/**
 * Release a handle. NULL is a no-op.
 */
void pancyc_tournament_free(struct pancyc_tournament *t);

/**
 * Release a string handed out by this library. NULL is a no-op.
 */
void pancyc_string_free(char *s);

/**
 * Canonical instance text of the handle.
 */
enum pancyc_status pancyc_serialize(const struct pancyc_tournament *t, char **out);

/**
 * Part count; 0 for a NULL handle.
 */
uint32_t pancyc_part_count(const struct pancyc_tournament *t);

/**
 * Vertex count; 0 for a NULL handle.
 */
uint32_t pancyc_vertex_count(const struct pancyc_tournament *t);

enum pancyc_status pancyc_is_strong(const struct pancyc_tournament *t, bool *out);

/**
 * Build a two-arc certificate and hand it back as JSON. The certificate is
 * re-verified before it leaves; a verification failure is an internal error.
 */
enum pancyc_status pancyc_solve(const struct pancyc_tournament *t, char **out_json);

/**
 * Verify certificate JSON against the handle: PANCYC_OK when valid,
 * PANCYC_ERR_INVALID_CERTIFICATE when the verifier rejects it (details in
 * the last-error slot), PANCYC_ERR_PARSE when the JSON is malformed.
 */
enum pancyc_status pancyc_verify(const struct pancyc_tournament *t, const char *cert_json);

/**
 * Cycle-length spectrum through the arc tail->head as a bitmask: bit L is
 * set iff a simple L-cycle through the arc exists, for L in 3..=min(max_len,
 * vertex count, 63).
 */
enum pancyc_status pancyc_arc_spectrum(const struct pancyc_tournament *t,
                                       uint32_t tail,
                                       uint32_t head,
                                       uint32_t max_len,
                                       uint64_t *out_mask);

/**
 * Number of arcs whose spectrum covers every length in 3..=c.
 */
enum pancyc_status pancyc_full_spectrum_count(const struct pancyc_tournament *t, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PANCYC_H */
