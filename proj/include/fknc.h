#ifndef FKNC_H
#define FKNC_H

/*
 * C interface to the fknc library: graded components of Fomin-Kirillov
 * algebras via a rewrite system on noncrossing trees, the Orlik-Terao
 * commutative quotient, and an exact linear-algebra verification oracle.
 *
 * All functions return fknc_status; outputs are passed through pointers.
 * Strings returned by the library are heap-allocated and must be released
 * with fknc_string_free. Handles are opaque and freed with their matching
 * *_free function. On failure, fknc_last_error() describes the problem.
 */

#include <stdint.h>

#if defined(_WIN32)
#define FKNC_API __declspec(dllexport)
#else
#define FKNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fknc_status {
  FKNC_OK = 0,
  FKNC_ERROR_INVALID = 1,  /* domain violation or bad argument */
  FKNC_ERROR_PARSE = 2,    /* malformed JSON input */
  FKNC_ERROR_LIMIT = 3,    /* size cap exceeded */
  FKNC_ERROR_VERIFY = 4,   /* a verification suite reported failures */
  FKNC_ERROR_INTERNAL = 5  /* internal cross-check mismatch */
} fknc_status;

typedef struct fknc_graph fknc_graph;
typedef struct fknc_element fknc_element;

FKNC_API const char *fknc_version(void);

/* Thread-local message for the most recent failure; empty string if none. */
FKNC_API const char *fknc_last_error(void);

FKNC_API void fknc_string_free(char *s);

/* Graphs. JSON schema: {"n": <int>, "edges": [[i, j], ...]}, 1 <= i < j <= n. */
FKNC_API fknc_status fknc_graph_parse(const char *json, fknc_graph **out);
FKNC_API fknc_status fknc_graph_complete(int n, fknc_graph **out);
FKNC_API void fknc_graph_free(fknc_graph *g);
FKNC_API fknc_status fknc_graph_to_json(const fknc_graph *g, char **json_out);
FKNC_API int fknc_graph_vertex_count(const fknc_graph *g);

/*
 * Noncrossing trees of the graph as JSON lines, one object per tree in
 * lexicographic edge-set order: {"edges": [...]} plus "signature" when
 * with_signatures is nonzero. reduced_only keeps only g-reduced trees.
 */
FKNC_API fknc_status fknc_trees_jsonl(const fknc_graph *g, int reduced_only,
                                      int with_signatures, char **jsonl_out);

/*
 * Tree elements. JSON schema: {"n": <int>, "terms": [{"coeff": "<exact
 * string>", "edges": [[i, j], ...]}, ...]}; output terms are sorted by
 * lexicographic edge set and coefficients are exact decimal strings.
 */
FKNC_API fknc_status fknc_element_parse(const char *json, fknc_element **out);
FKNC_API void fknc_element_free(fknc_element *e);
FKNC_API fknc_status fknc_element_to_json(const fknc_element *e, int pretty, char **json_out);

/*
 * Normal form over the graph. strategy is "lex" or "random"; the seed is
 * consumed only by "random". Output is strategy-independent.
 */
FKNC_API fknc_status fknc_element_reduce(const fknc_element *e, const fknc_graph *g,
                                         const char *strategy, uint64_t seed,
                                         fknc_element **out);

/*
 * Monomial JSON: {"n": <int>, "word": [[i, j], ...], "sign": <+-1>}.
 * Input pairs may be unordered; the result is the normalized form with
 * i < j and the sign folded in.
 */
FKNC_API fknc_status fknc_monomial_normalize(const char *json, char **json_out);

/*
 * Image of a tree element in the Orlik-Terao algebra of the graph, as
 * {"n": <int>, "ot_terms": [{"coeff": ..., "edges": ...}, ...]} on the
 * no-broken-circuit basis.
 */
FKNC_API fknc_status fknc_element_abelianize(const fknc_element *e, const fknc_graph *g,
                                             char **json_out);

/* Count of g-reduced noncrossing trees (dimension of the component). */
FKNC_API fknc_status fknc_basis_dimension(const fknc_graph *g, int64_t *dim_out);

/*
 * Chromatic polynomial, its Hilbert transform, and NBC counts by size:
 * {"chromatic": [...], "hilbert": [...], "nbc_counts": [...]}.
 * Returns FKNC_ERROR_INTERNAL if the two Hilbert routes disagree.
 */
FKNC_API fknc_status fknc_hilbert_json(const fknc_graph *g, char **json_out);

/*
 * Runs a verification suite: catalan | confluence | signature | oracle |
 * abelian. n <= 0 selects the suite's default size. The report is one JSON
 * object per check. Returns FKNC_ERROR_VERIFY when any check fails.
 */
FKNC_API fknc_status fknc_verify(const char *suite, int n, uint64_t seed, char **report_out);

#ifdef __cplusplus
}
#endif

#endif /* FKNC_H */
