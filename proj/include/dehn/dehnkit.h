/* C interface to the dehnkit library: combinatorial areas and Dehn functions
 * of finite presentations, van Kampen diagram collapse, and the
 * piecewise-linear pushing pipeline.
 *
 * All functions return dk_status; results are written through out
 * parameters.  Strings returned through char** are heap-allocated and must
 * be released with dk_string_free.  On failure dk_last_error() describes the
 * problem for the calling thread.
 */

#ifndef DEHNKIT_H
#define DEHNKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dk_status {
  DK_OK = 0,
  DK_ERR_PARSE = 1,       /* malformed input text */
  DK_ERR_INVALID = 2,     /* structurally invalid object or argument */
  DK_ERR_LIMIT = 3,       /* search limits exhausted, result undecided */
  DK_ERR_UNSUPPORTED = 4, /* unsupported parameter combination */
  DK_ERR_INTERNAL = 5     /* internal verification failure */
} dk_status;

typedef struct dk_presentation dk_presentation;
typedef struct dk_complex dk_complex;
typedef struct dk_diagram dk_diagram;

const char* dk_last_error(void);
void dk_string_free(char* s);

/* --- presentations, areas, Dehn functions ------------------------------- */

dk_status dk_presentation_parse(const char* text, dk_presentation** out);
void dk_presentation_free(dk_presentation* p);
dk_status dk_presentation_serialize(const dk_presentation* p, char** out);

/* Result JSON: {"status": "exact"|"lower_bound"|"not_nullhomotopic"|
 * "unknown", "area": n, "lower_bound": n, "certified": bool,
 * "nodes_expanded": n, "max_word_length_reached": n}.  max_area <= 0 and
 * max_word_length <= 0 select the defaults. */
dk_status dk_area(const dk_presentation* p, const char* word, int64_t max_area,
                  int64_t max_word_length, char** out_json);

/* CSV table "n,value" of the Dehn function up to n_max; DK_ERR_LIMIT when
 * any entry is not certified exact (the table is still produced). */
dk_status dk_dehn_table(const dk_presentation* p, int64_t n_max, int64_t max_area,
                        int64_t max_word_length, char** out_csv);

/* Growth classification of a CSV table against the reference scale
 * {0, 1, n, n^2, n^3, 2^n}; JSON report with witnesses. */
dk_status dk_classify_table(const char* csv, int max_exp, char** out_json);

/* --- complexes ----------------------------------------------------------- */

dk_status dk_complex_parse(const char* text, dk_complex** out);
dk_status dk_complex_standard(const char* name, int size, dk_complex** out);
dk_status dk_complex_from_presentation(const dk_presentation* p, dk_complex** out);
dk_status dk_complex_triangulate(const dk_complex* c, dk_complex** out);
dk_status dk_complex_serialize(const dk_complex* c, char** out);
void dk_complex_free(dk_complex* c);

/* --- van Kampen diagrams ------------------------------------------------- */

dk_status dk_diagram_parse(const char* json_text, dk_diagram** out);
dk_status dk_diagram_serialize(const dk_diagram* d, char** out);
void dk_diagram_free(dk_diagram* d);

/* Collapse a degenerate diagram to a combinatorial one.  The report JSON
 * carries excised_sphere_count / area_before / area_after. */
dk_status dk_diagram_collapse(const dk_diagram* d, dk_diagram** out_diagram,
                              char** out_report_json);

/* Minimal diagram area for a boundary word over a complex by exhaustive
 * small-diagram search; fills *found = 0 when no diagram with at most
 * max_cells cells exists. */
dk_status dk_enumerate_area(const dk_complex* c, const int* boundary_darts, size_t len,
                            int64_t max_cells, int* found, int64_t* out_area);

/* --- pushing ------------------------------------------------------------- */

/* Push the chain (JSON, kind "chain1" or "loop") into the 1-skeleton of the
 * complex.  Outputs: the pushed chain R (or loop), the homotopy 2-chain S,
 * and the certificate. */
dk_status dk_push(const dk_complex* c, const char* chain_json, double r, uint64_t seed,
                  char** out_r_json, char** out_s_json, char** out_cert_json);

/* Monte-Carlo estimate of the bad-center measure alpha(v) for a chain read
 * from JSON; every piece must live in a single simplex. */
dk_status dk_alpha(const char* chain_json, double v, int samples, double r, uint64_t seed,
                   char** out_json);

/* --- loop combinatorialization and disc analysis ------------------------- */

dk_status dk_straighten(const dk_complex* c, const char* loop_json, uint64_t seed,
                        char** out_loop_json, char** out_cert_json);

dk_status dk_degree(const char* discmap_json, uint64_t seed, char** out_report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEHNKIT_H */
