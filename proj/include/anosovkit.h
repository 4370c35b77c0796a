/* anosovkit: exact-arithmetic toolkit for the symmetry calculus of the
 * suspension Anosov flow on the cat-map mapping torus and its Dehn fillings.
 *
 * C API of the shared library. All results are returned as heap-allocated
 * JSON or CSV strings owned by the caller (release with ak_string_free).
 * Functions return AK_OK on success; on failure ak_last_error() describes
 * the most recent error of the calling thread.
 */
#ifndef ANOSOVKIT_H
#define ANOSOVKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ak_status {
  AK_OK = 0,
  AK_CHECK_FAILED = 1,
  AK_USAGE_ERROR = 2,
  AK_PREMISE_VIOLATED = 3,
  AK_STALE_HASH = 4,
  AK_INTERNAL_ERROR = 5
} ak_status;

/* Opaque toolkit handle holding the configuration. */
typedef struct ak_toolkit ak_toolkit;

/* config_json may be NULL for defaults; see the README for the schema. */
ak_status ak_toolkit_new(const char* config_json, ak_toolkit** out);
void ak_toolkit_free(ak_toolkit* kit);

const char* ak_version(void);
/* Thread-local message for the last failing call. */
const char* ak_last_error(void);
void ak_string_free(char* s);

/* Fixed points of monodromy^period grouped into orbits. */
ak_status ak_orbits(ak_toolkit* kit, long long period, char** out_json);
ak_status ak_orbits_csv(ak_toolkit* kit, long long period, char** out_csv);

/* Holonomy classes and the pairwise free-homotopy matrix at the period. */
ak_status ak_nielsen(ak_toolkit* kit, long long period, char** out_json);

/* Normalizer census and quotient group modulo the deck group. */
ak_status ak_symmetries(ak_toolkit* kit, long long bound, char** out_json);

/* H1 of the suspension, the knot exterior and the k-filling. */
ak_status ak_homology(ak_toolkit* kit, long long k, char** out_json);

/* Strip-model demo samples as CSV. */
ak_status ak_orbit_space_demo(ak_toolkit* kit, char** out_csv);

/* Transverse curve of class (1, k) with sampled margin and pinch data. */
ak_status ak_surgery_check(ak_toolkit* kit, long long k, char** out_json);
ak_status ak_surgery_curve_csv(ak_toolkit* kit, long long k, char** out_csv);

/* Full certificate for the k-filling (requires |k| > 4). */
ak_status ak_certificate(ak_toolkit* kit, long long k, char** out_json);

/* Re-runs every check recorded in a certificate. Returns AK_OK when all
 * reproduce, AK_CHECK_FAILED when a computation disagrees with the record,
 * AK_STALE_HASH when stored inputs do not match their hashes. */
ak_status ak_replay(ak_toolkit* kit, const char* certificate_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ANOSOVKIT_H */
