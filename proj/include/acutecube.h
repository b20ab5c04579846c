/* acutecube: exact counting and enumeration of 0/1-polytopes and acute
 * 0/1-simplices in the unit n-cube modulo the hyperoctahedral group.
 *
 * All operations run through an opaque context that carries options and the
 * last error message. Functions return a status code; string outputs are
 * heap-allocated and must be released with acutecube_string_free().
 */
#ifndef ACUTECUBE_H
#define ACUTECUBE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acutecube_status {
    ACUTECUBE_OK = 0,
    ACUTECUBE_ERR_INVALID_ARGUMENT = 1,
    ACUTECUBE_ERR_LIMIT = 2,
    ACUTECUBE_ERR_PARSE = 3,
    ACUTECUBE_ERR_IO = 4,
    ACUTECUBE_ERR_INTERNAL = 5,
    ACUTECUBE_ERR_VERIFICATION = 6
} acutecube_status;

typedef struct acutecube_ctx acutecube_ctx;

acutecube_ctx *acutecube_ctx_new(void);
void acutecube_ctx_free(acutecube_ctx *ctx);

/* Message for the most recent failing call on this context. */
const char *acutecube_last_error(const acutecube_ctx *ctx);

/* Empty dir selects the ACUTE_CUBE_CACHE environment variable, falling back
 * to the platform cache location. */
acutecube_status acutecube_set_cache_dir(acutecube_ctx *ctx, const char *dir);
acutecube_status acutecube_set_jobs(acutecube_ctx *ctx, int jobs);
/* Upper bound on the cube dimension for cycle-index work (default 16). */
acutecube_status acutecube_set_dimension_cap(acutecube_ctx *ctx, int cap);
/* Upper bound on the census dimension (default 9). */
acutecube_status acutecube_set_census_cap(acutecube_ctx *ctx, int cap);

void acutecube_string_free(char *s);

/* Cycle index of the induced vertex permutations in tabulated form.
 * format: "table", "json" or "csv". */
acutecube_status acutecube_cycle_index(acutecube_ctx *ctx, int n, const char *format, char **out);

/* Number of equivalence classes of k-vertex subsets, as a decimal string. */
acutecube_status acutecube_count_vertices(acutecube_ctx *ctx, int n, long long k, char **out);
/* Total over all k. */
acutecube_status acutecube_count_all(acutecube_ctx *ctx, int n, char **out);
/* The k = 1..n+1 row. format: "plain", "csv" or "json". */
acutecube_status acutecube_count_simplices(acutecube_ctx *ctx, int n, const char *format, char **out);

/* Triangle classes. filter: "all", "right" or "acute". With list != 0 emits
 * one line per class; otherwise the count (format "plain" or "csv"). */
acutecube_status acutecube_triangles(acutecube_ctx *ctx, int n, const char *filter, int list,
                                     const char *format, char **out);

/* Census of acute simplices with n+1 vertices. format: "jsonl" or "matrix". */
acutecube_status acutecube_enumerate_acute(acutecube_ctx *ctx, int n, const char *format,
                                           char **out);

/* Minimal matrix representation of the matrix given in text format. */
acutecube_status acutecube_canonicalize(acutecube_ctx *ctx, const char *matrix_text, char **out);

/* Acuteness / strict ultrametricity checks of a matrix in text format (the
 * zero column, if present, is dropped; the Gramian test uses the rest).
 * Results are 0 or 1. Pass NULL to skip a check. */
acutecube_status acutecube_check(acutecube_ctx *ctx, const char *matrix_text, int *acute,
                                 int *ultrametric);

/* The Hessenberg family at size n, one line per composition; verify != 0
 * additionally checks determinants, ultrametricity and acuteness. */
acutecube_status acutecube_hessenberg(acutecube_ctx *ctx, int n, int verify, char **out);

/* Fraction tree levels 0..depth as JSON lines. */
acutecube_status acutecube_kepler(acutecube_ctx *ctx, int depth, char **out);

#ifdef __cplusplus
}
#endif

#endif /* ACUTECUBE_H */
