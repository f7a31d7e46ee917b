/*
 * bhole C API.
 *
 * Opaque handles plus status codes. Every function returning bh_status sets
 * a thread-local message readable through bh_last_error() when it fails.
 * Strings returned through `char**` are owned by the caller and released
 * with bh_string_free().
 */
#ifndef BHOLE_H
#define BHOLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BHOLE_BUILDING)
#    define BHOLE_API __declspec(dllexport)
#  else
#    define BHOLE_API __declspec(dllimport)
#  endif
#else
#  define BHOLE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bh_status {
  BH_OK = 0,
  BH_ERR_PARSE = 1,            /* malformed text input */
  BH_ERR_INVALID_ARGUMENT = 2, /* bad parameter or precondition */
  BH_ERR_TOO_LARGE = 3,        /* size guard or work budget exceeded */
  BH_ERR_VERIFY = 4,           /* cycle / certificate does not check out */
  BH_ERR_CONTRACT = 5,         /* internal guarantee violated */
  BH_ERR_INTERNAL = 6
} bh_status;

typedef struct bh_graph bh_graph;
typedef struct bh_ham_result bh_ham_result;
typedef struct bh_disjoint_result bh_disjoint_result;

/* Default work budget for exact searches. */
#define BH_DEFAULT_BUDGET UINT64_C(100000000)

BHOLE_API const char* bh_version(void);
BHOLE_API const char* bh_last_error(void);
BHOLE_API const char* bh_status_name(bh_status status);
BHOLE_API void bh_string_free(char* s);

/* ---- graphs ---- */

BHOLE_API bh_status bh_graph_parse(const char* text, bh_graph** out);
/* Family expression, e.g. "complete 4", "gnp 10 0.5 42", "complement-of(bipartite 2 3)". */
BHOLE_API bh_status bh_graph_generate(const char* family_spec, bh_graph** out);
BHOLE_API void bh_graph_free(bh_graph* g);
BHOLE_API bh_status bh_graph_serialize(const bh_graph* g, char** out);
BHOLE_API size_t bh_graph_order(const bh_graph* g);
BHOLE_API size_t bh_graph_size(const bh_graph* g);
BHOLE_API bh_status bh_graph_min_degree(const bh_graph* g, int64_t* out);
BHOLE_API size_t bh_graph_component_count(const bh_graph* g);

/* ---- exact parameters ---- */

/* size_guard != 0 limits n to 20. */
BHOLE_API bh_status bh_alpha_tilde_exact(const bh_graph* g, uint64_t budget, int size_guard, int64_t* out);
BHOLE_API bh_status bh_independence_number(const bh_graph* g, uint64_t budget, int64_t* out);
BHOLE_API bh_status bh_vertex_connectivity(const bh_graph* g, uint64_t budget, int64_t* out);
BHOLE_API bh_status bh_is_hamiltonian_exact(const bh_graph* g, uint64_t budget, int* out);

/* ---- Hamilton cycle or certificate ---- */

BHOLE_API bh_status bh_find_hamilton(const bh_graph* g, bh_ham_result** out);
BHOLE_API void bh_ham_result_free(bh_ham_result* r);
BHOLE_API int bh_ham_result_is_cycle(const bh_ham_result* r);
/* Certificate value k, or 0 for the cycle variant. */
BHOLE_API int64_t bh_ham_result_certificate_k(const bh_ham_result* r);
/* Cycle file or certificate file text, without trailing newline. */
BHOLE_API bh_status bh_ham_result_format(const bh_ham_result* r, char** out);

/* ---- edge-disjoint Hamilton cycles ---- */

/* r_cap < 0 means no cap. */
BHOLE_API bh_status bh_find_disjoint(const bh_graph* g, int64_t r_cap, bh_disjoint_result** out);
BHOLE_API void bh_disjoint_result_free(bh_disjoint_result* r);
BHOLE_API size_t bh_disjoint_cycle_count(const bh_disjoint_result* r);
BHOLE_API int64_t bh_disjoint_translated_k(const bh_disjoint_result* r);
BHOLE_API int bh_disjoint_capped(const bh_disjoint_result* r);
BHOLE_API bh_status bh_disjoint_format_bundle(const bh_disjoint_result* r, char** out);
BHOLE_API bh_status bh_disjoint_format_summary(const bh_disjoint_result* r, char** out);
BHOLE_API bh_status bh_disjoint_format_cycle(const bh_disjoint_result* r, size_t index, char** out);
BHOLE_API bh_status bh_disjoint_format_residual(const bh_disjoint_result* r, char** out);
BHOLE_API bh_status bh_disjoint_format_translated(const bh_disjoint_result* r, char** out);

/* ---- verification ---- */

typedef enum bh_artifact_kind {
  BH_ARTIFACT_CYCLE = 1,
  BH_ARTIFACT_CERTIFICATE = 2,
  BH_ARTIFACT_BUNDLE = 3
} bh_artifact_kind;

/* Detects the artifact kind from its first line and checks it against g:
 * a cycle must be a Hamilton cycle, a certificate must verify, a bundle must
 * pass every disjoint-result check. On success *value_out (optional) gets the
 * cycle length, the certificate value, or the bundle cycle count. */
BHOLE_API bh_status bh_verify_text(const bh_graph* g, const char* artifact, bh_artifact_kind* kind_out,
                                   int64_t* value_out);

/* ---- hardness reduction ---- */

/* Reads a bipartite instance ("a b k" + cross edges) and builds its image graph. */
BHOLE_API bh_status bh_reduce_bcbs(const char* instance_text, bh_graph** out);
/* Writes 1 when both sides of the reduction agree. Sides go to the optional outputs. */
BHOLE_API bh_status bh_check_reduction(const char* instance_text, uint64_t budget, int* equivalent,
                                       int* has_biclique, int* alpha_tilde_ge_2k);

/* ---- random-graph experiments ---- */

typedef struct bh_experiment_config {
  int64_t n;
  double p;
  int64_t r;
  int64_t samples;
  uint64_t seed;
  uint64_t oracle_budget;
  int64_t jobs;
} bh_experiment_config;

BHOLE_API bh_status bh_threshold_params(int64_t n, int64_t r, int64_t* t, int64_t* d);
/* CSV report (header, rows, '#' aggregate lines), without trailing newline. */
BHOLE_API bh_status bh_run_experiment(const bh_experiment_config* cfg, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* BHOLE_H */
