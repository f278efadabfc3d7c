/* C interface to the snake graph calculus library.
 *
 * All functions return 0 on success and a nonzero error code otherwise;
 * sc_last_error() describes the most recent failure on the context.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with sc_string_free().
 */
#ifndef SNAKECALC_H
#define SNAKECALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sc_ctx sc_ctx;
typedef struct sc_graph sc_graph;
typedef struct sc_tri sc_tri;
typedef struct sc_seed sc_seed;

enum {
  SC_OK = 0,
  SC_ERR_PARSE = 1,     /* malformed input */
  SC_ERR_INVALID = 2,   /* structural validation failed */
  SC_ERR_DOMAIN = 3,    /* operation not applicable */
  SC_ERR_IO = 4,        /* file access */
  SC_ERR_INTERNAL = 5
};

sc_ctx* sc_ctx_new(void);
void sc_ctx_free(sc_ctx* ctx);
const char* sc_last_error(const sc_ctx* ctx);
void sc_string_free(char* s);

/* Graphs (snake / band / trivial edge), in the documented JSON schema.
 * Graph JSON without variable context needs the bundle's variable lists,
 * which are supplied as JSON arrays of names; pass NULL to derive the
 * variable table from the labels appearing in the graph itself. */
int sc_graph_from_json(sc_ctx* ctx, const char* graph_json, const char* x_vars_json,
                       sc_graph** out);
void sc_graph_free(sc_graph* g);
int sc_graph_to_json(sc_ctx* ctx, const sc_graph* g, char** out);
int sc_graph_expand(sc_ctx* ctx, const sc_graph* g, char** canonical_poly);
/* Matching list report; json != 0 selects machine-readable output. */
int sc_graph_matchings(sc_ctx* ctx, const sc_graph* g, int json, char** report);

/* Triangulations and curves. */
int sc_tri_standard(sc_ctx* ctx, int genus, int orbifold_points, sc_tri** out);
int sc_tri_from_json(sc_ctx* ctx, const char* tri_json, sc_tri** out);
void sc_tri_free(sc_tri* t);
int sc_tri_to_json(sc_ctx* ctx, const sc_tri* t, char** out);
int sc_curve_graph(sc_ctx* ctx, const sc_tri* t, const char* curve_json, sc_graph** out);

/* Seeds and mutation. */
int sc_seed_from_tri(sc_ctx* ctx, const sc_tri* t, sc_seed** out);
int sc_seed_from_json(sc_ctx* ctx, const char* seed_json, sc_seed** out);
void sc_seed_free(sc_seed* s);
int sc_seed_to_json(sc_ctx* ctx, const sc_seed* s, char** out);
/* ks: 1-based mutation directions. */
int sc_seed_mutate(sc_ctx* ctx, const sc_seed* s, const int* ks, int nk, sc_seed** out);
/* Cluster variable k (1-based) after the flip sequence, canonical form. */
int sc_oracle(sc_ctx* ctx, const sc_tri* t, const int* flips, int nflips, int k, char** out);

/* Identity verification. `path` is an identity JSON file or, with
 * sc_verify_suite, a fixture directory. all_ok is set to 1 or 0. */
int sc_verify_file(sc_ctx* ctx, const char* path, int json, char** report, int* all_ok);
int sc_verify_suite(sc_ctx* ctx, const char* dir, int json, char** report, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif
