/* kmss — affine Kac-Moody symmetric space toolkit, C interface.
 *
 * All functions return a kmss_status; results are returned through out
 * parameters.  Strings returned through char** are owned by the caller and
 * must be released with kmss_string_free.  On failure an error message may
 * be returned through the optional err parameter (also caller-owned).
 */
#ifndef KMSS_H
#define KMSS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kmss_status {
  KMSS_OK = 0,
  KMSS_ERR_VALIDATION = 2,  /* bad input: schema violation, bad rank, ... */
  KMSS_ERR_UNCLASSIFIED = 3, /* diagram reduces outside the catalog */
  KMSS_ERR_MISMATCH = 4,     /* crosscheck disagreement */
  KMSS_ERR_INTERNAL = 5
} kmss_status;

/* Opaque Vogan diagram handle. */
typedef struct kmss_vogan kmss_vogan;

const char* kmss_version(void);
void kmss_string_free(char* s);
void kmss_vogan_free(kmss_vogan* vd);

/* Parse a Vogan document ("kmss/1" schema). */
kmss_status kmss_vogan_parse(const char* json, kmss_vogan** out, char** err);

/* Build from parts: series "A".."D", painted node indices, automorphism name
 * ("id", "r", "s", "r^n", "rs", "gamma", "sigma_v", "sigma_s"). */
kmss_status kmss_vogan_build(const char* series, int rank, const int* painted, int n_painted,
                             const char* automorphism, kmss_vogan** out, char** err);

kmss_status kmss_vogan_to_json(const kmss_vogan* vd, char** out);

/* Canonical representative with at most two painted vertices. */
kmss_status kmss_vogan_reduce(const kmss_vogan* vd, kmss_vogan** out, char** err);

/* format: "ascii" or "dot". */
kmss_status kmss_vogan_render(const kmss_vogan* vd, const char* format, char** out, char** err);

/* Classification result as JSON; KMSS_ERR_UNCLASSIFIED when the reduced
 * diagram has no catalog row (the reduced form is still reported). */
kmss_status kmss_classify(const kmss_vogan* vd, char** json_out, char** err);

/* Fixed-algebra simple roots as JSON. */
kmss_status kmss_fixed_roots(const kmss_vogan* vd, char** json_out, char** err);

/* All catalog rows for the diagram family of (series, rank), as JSON. */
kmss_status kmss_list_forms(const char* series, int rank, char** json_out, char** err);

/* table: "A-odd", "A-even", "A1", "A2", "B", "C-odd", "C-even", "D-even",
 * "D-odd"; format: "md" or "csv". */
kmss_status kmss_emit_table(const char* table, int n, const char* format, char** out, char** err);

/* Names of the registered worked cases for (series, rank), as a JSON array. */
kmss_status kmss_case_names(const char* series, int rank, char** json_out, char** err);

/* Run the algebraic pipeline for a registered case and cross-validate it
 * against the Vogan classification.  Returns KMSS_ERR_MISMATCH when the two
 * routes disagree; the JSON report is produced either way. */
kmss_status kmss_verify_case(const char* series, int rank, const char* case_name, int window,
                             char** report_json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* KMSS_H */
