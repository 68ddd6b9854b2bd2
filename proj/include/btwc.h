#ifndef BTWC_H
#define BTWC_H

/* btwc: exact betweenness centrality, relative centrality, and Freeman
 * centralization for unweighted graphs.
 *
 * Every function that can fail returns a btwc_status; on failure the
 * thread-local message from btwc_last_error() describes what went wrong.
 * Exact rationals cross the boundary as canonical "p/q" strings ("/1"
 * elided); free them with btwc_string_free. Handles are freed with their
 * matching *_free function. Accessors taking a handle tolerate NULL and
 * report BTWC_ERR_ARGUMENT (or return 0 / -1 where noted).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum btwc_status {
  BTWC_OK = 0,
  BTWC_ERR_ARGUMENT = 1,  /* invalid parameter or out-of-domain request */
  BTWC_ERR_PARSE = 2,     /* malformed spec string or edge-list text */
  BTWC_ERR_IO = 3,        /* file could not be read or written */
  BTWC_ERR_STRUCTURE = 4, /* input graph lacks required structure */
  BTWC_ERR_SIZE = 5,      /* instance exceeds a size cap */
  BTWC_ERR_NOMEM = 6,
  BTWC_ERR_INTERNAL = 7
} btwc_status;

typedef struct btwc_graph btwc_graph;   /* immutable simple graph */
typedef struct btwc_scores btwc_scores; /* per-vertex exact rational scores */

const char* btwc_version(void);

/* Thread-local message for the most recent failure on this thread; empty
 * string when the last call succeeded. */
const char* btwc_last_error(void);

void btwc_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* endpoints holds 2*edge_count vertex ids: u0, v0, u1, v1, ...
 * Duplicate edges collapse; self-loops are rejected. */
btwc_status btwc_graph_build(int32_t n, const int32_t* endpoints,
                             size_t edge_count, btwc_graph** out);

/* Family spec strings: <family>:<p1>[,<p2>] with families star, complete,
 * wheel, kminus, kmn, cocktail, crown, path, ladder, cycle, circladder,
 * hypercube, plus tree:@<edge-file>. */
btwc_status btwc_graph_from_spec(const char* spec, btwc_graph** out);

btwc_status btwc_graph_read_file(const char* path, btwc_graph** out);

/* Canonical edge-list text ("n=<count>" header, "u v" lines, u < v). */
btwc_status btwc_graph_format(const btwc_graph* g, char** out);

void btwc_graph_free(btwc_graph* g);

int32_t btwc_graph_order(const btwc_graph* g); /* -1 on NULL */
int64_t btwc_graph_size(const btwc_graph* g);  /* -1 on NULL */
int btwc_graph_connected(const btwc_graph* g); /* 1/0; 0 on NULL */
int btwc_graph_has_edge(const btwc_graph* g, int32_t u, int32_t v);

/* ---- betweenness ------------------------------------------------------- */

/* Exact scores over unordered pairs. threads: 1 = single-threaded,
 * <= 0 = hardware concurrency. */
btwc_status btwc_betweenness(const btwc_graph* g, int threads,
                             btwc_scores** out);

/* Independent enumeration oracle; fails with BTWC_ERR_SIZE above cap. */
btwc_status btwc_betweenness_bruteforce(const btwc_graph* g, int32_t cap,
                                        btwc_scores** out);

/* Double-precision engine; out must hold btwc_graph_order(g) doubles.
 * Bit-identical for any thread count. */
btwc_status btwc_betweenness_float(const btwc_graph* g, int threads,
                                   double* out);

/* Closed-form scores of a tree (branch-size products at every vertex);
 * BTWC_ERR_STRUCTURE when g is not a tree. */
btwc_status btwc_tree_scores(const btwc_graph* g, btwc_scores** out);

/* Closed-form family scores for a spec string, keyed to the generator's
 * canonical labeling. */
btwc_status btwc_closed_form(const char* spec, btwc_scores** out);

/* Closed-form graph centralization for a spec string, as "p/q".
 * BTWC_ERR_ARGUMENT when undefined (order < 3). */
btwc_status btwc_closed_form_centralization(const char* spec, char** out);

/* ---- scores ------------------------------------------------------------ */

void btwc_scores_free(btwc_scores* s);

int32_t btwc_scores_order(const btwc_scores* s); /* -1 on NULL */

/* Exact score of vertex v as "p/q". */
btwc_status btwc_scores_get(const btwc_scores* s, int32_t v, char** out);

/* Score rounded to double (exact when representable). */
btwc_status btwc_scores_get_double(const btwc_scores* s, int32_t v,
                                   double* out);

/* Relative centrality 2*C_B(v)/((n-1)(n-2)) as "p/q"; BTWC_ERR_ARGUMENT
 * when n < 3. */
btwc_status btwc_scores_relative(const btwc_scores* s, int32_t v, char** out);

/* Freeman centralization in [0,1] as "p/q"; BTWC_ERR_ARGUMENT when n < 3. */
btwc_status btwc_scores_centralization(const btwc_scores* s, char** out);

/* Smallest vertex id attaining the maximum score. */
btwc_status btwc_scores_max_vertex(const btwc_scores* s, int32_t* out);

/* 1 when same order and all scores are equal as exact rationals; 0
 * otherwise (including NULL inputs). */
int btwc_scores_equal(const btwc_scores* a, const btwc_scores* b);

/* Largest per-vertex |a - b| as "p/q"; orders must match. */
btwc_status btwc_scores_max_abs_diff(const btwc_scores* a,
                                     const btwc_scores* b, char** out);

/* ---- random instances --------------------------------------------------- */

/* Uniform random labeled tree on n vertices; deterministic per seed. */
btwc_status btwc_random_tree(int32_t n, uint64_t seed, btwc_graph** out);

/* G(n, p) conditioned on connectivity; deterministic per seed. */
btwc_status btwc_random_connected(int32_t n, double p, uint64_t seed,
                                  btwc_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* BTWC_H */
