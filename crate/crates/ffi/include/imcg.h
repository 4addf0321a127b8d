#ifndef IMCG_H
#define IMCG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ImcgStatus {
  IMCG_STATUS_OK = 0,
  IMCG_STATUS_NOT_EXISTS = 1,
  IMCG_STATUS_INVALID_INPUT = 2,
  IMCG_STATUS_CAPPED = 3,
  IMCG_STATUS_INTERNAL = 4,
  IMCG_STATUS_NULL_POINTER = 5,
} ImcgStatus;

/**
 * Vertex set selector for validators and oracle queries.
 */
typedef enum ImcgPart {
  IMCG_PART_ALL = 0,
  IMCG_PART_ONE = 1,
  IMCG_PART_TWO = 2,
} ImcgPart;

typedef struct ImcgColoring ImcgColoring;

/**
 * A multigraph, optionally with a bipartition.
 */
typedef struct ImcgGraph ImcgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the message of the last failure on this thread, or returns NULL
 * if there was none. Free the result with [`imcg_string_free`].
 */
char *imcg_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void imcg_string_free(char *s);

/**
 * Parses a graph file (`p imcg n m`, optional `b`/`bp` line, `e u v` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ImcgStatus imcg_graph_parse(const char *text, struct ImcgGraph **out);

/**
 * Builds a graph on vertices `1..=n` from `m` endpoint pairs stored as
 * `endpoints[2i], endpoints[2i+1]`. `parts` is NULL or points to `n`
 * entries, each 1 or 2.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values, `parts` to `n` values or be
 * NULL, and `out` must be writable.
 */
enum ImcgStatus imcg_graph_new(size_t n,
                               const size_t *endpoints,
                               size_t m,
                               const uint8_t *parts,
                               struct ImcgGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void imcg_graph_free(struct ImcgGraph *g);

/**
 * # Safety
 * `g` must be a valid handle or NULL (which yields 0).
 */
size_t imcg_graph_vertex_count(const struct ImcgGraph *g);

/**
 * # Safety
 * `g` must be a valid handle or NULL (which yields 0).
 */
size_t imcg_graph_edge_count(const struct ImcgGraph *g);

/**
 * # Safety
 * `g` must be a valid handle or NULL (which yields 0).
 */
size_t imcg_graph_max_degree(const struct ImcgGraph *g);

/**
 * # Safety
 * `g` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_graph_degree(const struct ImcgGraph *g, size_t vertex, size_t *out);

/**
 * Serializes the graph in the file format. Free with [`imcg_string_free`].
 *
 * # Safety
 * `g` must be a valid handle or NULL (which yields NULL).
 */
char *imcg_graph_serialize(const struct ImcgGraph *g);

/**
 * Creates a coloring from `m` colors, color of edge `i` at `colors[i-1]`.
 *
 * # Safety
 * `colors` must point to `m` values and `out` must be writable.
 */
enum ImcgStatus imcg_coloring_new(const uint32_t *colors, size_t m, struct ImcgColoring **out);

/**
 * Parses a coloring file (`p imcol m t`, `c e col` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ImcgStatus imcg_coloring_parse(const char *text, struct ImcgColoring **out);

/**
 * # Safety
 * `c` must be NULL or a handle from this library not yet freed.
 */
void imcg_coloring_free(struct ImcgColoring *c);

/**
 * # Safety
 * `c` must be a valid handle or NULL (which yields 0).
 */
size_t imcg_coloring_len(const struct ImcgColoring *c);

/**
 * Color of edge `edge` (1-based).
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_coloring_get(const struct ImcgColoring *c, size_t edge, uint32_t *out);

/**
 * Serializes the coloring in the file format. Free with [`imcg_string_free`].
 *
 * # Safety
 * `c` must be a valid handle or NULL (which yields NULL).
 */
char *imcg_coloring_serialize(const struct ImcgColoring *c);

/**
 * Checks properness. Writes whether the coloring passes to `*valid`.
 *
 * # Safety
 * `g`, `c` must be valid handles and `valid` writable.
 */
enum ImcgStatus imcg_is_proper(const struct ImcgGraph *g,
                               const struct ImcgColoring *c,
                               bool *valid);

/**
 * Checks that `c` is an interval `t`-coloring on `part`.
 *
 * # Safety
 * `g`, `c` must be valid handles and `valid` writable.
 */
enum ImcgStatus imcg_is_interval_on(const struct ImcgGraph *g,
                                    const struct ImcgColoring *c,
                                    enum ImcgPart part,
                                    uint32_t t,
                                    bool *valid);

/**
 * Checks that `c` is a continuous `t`-coloring on `part`.
 *
 * # Safety
 * `g`, `c` must be valid handles and `valid` writable.
 */
enum ImcgStatus imcg_is_continuous_on(const struct ImcgGraph *g,
                                      const struct ImcgColoring *c,
                                      enum ImcgPart part,
                                      uint32_t t,
                                      bool *valid);

/**
 * Continuous coloring on part 1 of a bipartite graph whose edges all have
 * a part-1 endpoint of degree at least the other endpoint's.
 *
 * # Safety
 * `g` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_continuous_on_part(const struct ImcgGraph *g, struct ImcgColoring **out);

/**
 * Interval coloring on part 1 using every color once.
 *
 * # Safety
 * `g` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_sequential_max_coloring(const struct ImcgGraph *g, struct ImcgColoring **out);

/**
 * Folds an interval coloring on all vertices onto `Δ` colors.
 *
 * # Safety
 * `g`, `c` must be valid handles and `out` writable.
 */
enum ImcgStatus imcg_compress_to_delta(const struct ImcgGraph *g,
                                       const struct ImcgColoring *c,
                                       struct ImcgColoring **out);

/**
 * Steps an interval `t`-coloring of a regular graph down to `t - 1`.
 *
 * # Safety
 * `g`, `c` must be valid handles and `out` writable.
 */
enum ImcgStatus imcg_regular_step_down(const struct ImcgGraph *g,
                                       const struct ImcgColoring *c,
                                       struct ImcgColoring **out);

/**
 * Interval coloring on part 1 with exactly `t` colors. Returns
 * `NotExists` when `t` lies outside `[w1, m]`. `node_cap = 0` selects the
 * default search budget.
 *
 * # Safety
 * `g` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_realize_spectrum(const struct ImcgGraph *g,
                                      uint32_t t,
                                      uint64_t node_cap,
                                      struct ImcgColoring **out);

/**
 * Least and greatest `t` with an interval `t`-coloring on `part`.
 * Returns `NotExists` when there is none.
 *
 * # Safety
 * `g` must be a valid handle; `least` and `greatest` writable.
 */
enum ImcgStatus imcg_interval_stats(const struct ImcgGraph *g,
                                    enum ImcgPart part,
                                    uint64_t node_cap,
                                    uint32_t *least,
                                    uint32_t *greatest);

/**
 * Whether an interval `t`-coloring on `part` exists. Writes the witness
 * to `out` when `out` is non-NULL and one exists.
 *
 * # Safety
 * `g` must be a valid handle; `out` must be NULL or writable.
 */
enum ImcgStatus imcg_solve_interval_on(const struct ImcgGraph *g,
                                       enum ImcgPart part,
                                       uint32_t t,
                                       uint64_t node_cap,
                                       struct ImcgColoring **out);

/**
 * Chromatic index by exhaustive search.
 *
 * # Safety
 * `g` must be a valid handle and `out` writable.
 */
enum ImcgStatus imcg_chromatic_index(const struct ImcgGraph *g, uint64_t node_cap, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IMCG_H */
