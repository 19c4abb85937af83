/* C interface of the bitmce maximal clique enumerator. */

#ifndef BITMCE_H
#define BITMCE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every API call.
typedef enum McStatus {
  MC_STATUS_OK = 0,
  MC_STATUS_NULL_ARGUMENT = 1,
  MC_STATUS_INVALID_ARGUMENT = 2,
  MC_STATUS_PARSE = 3,
  MC_STATUS_IO = 4,
  MC_STATUS_UNKNOWN_STRATEGY = 5,
  MC_STATUS_CALLBACK_ABORT = 6,
  MC_STATUS_TIME_LIMIT = 7,
  MC_STATUS_PANIC = 8,
} McStatus;

// Opaque graph handle.
typedef struct McGraph McGraph;

// Counters and timings of one enumeration run.
typedef struct McStats {
  uint64_t n;
  uint64_t m;
  double density;
  uint64_t cliques;
  uint64_t steps;
  uint64_t max_clique;
  double elapsed_seconds;
  double prep_seconds;
  uint64_t pivot_scans;
  // Nonzero when the run stopped early; counters cover the explored part.
  bool partial;
} McStats;

// Visitor for `mce_enumerate_with_callback`: receives each maximal
// clique as `len` vertex labels; a nonzero return aborts enumeration.
typedef int32_t (*McCliqueCallback)(const uint32_t *vertices, size_t len, void *user);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or null if none.
// The pointer stays valid until the next failing call on this thread.
const char *mce_last_error(void);

// Library version as a static NUL-terminated string.
const char *mce_version(void);

// Number of built-in strategies.
size_t mce_strategy_count(void);

// Name of the strategy at `index`, or null when out of range. The
// returned strings are static and usable as the `strategy` argument
// of the enumeration calls.
const char *mce_strategy_name(size_t index);

// Build a seeded uniform random graph.
//
// # Safety
// `out` must be a valid pointer to an `McGraph*` slot.
enum McStatus mce_graph_random(uint64_t n, double p, uint64_t seed, struct McGraph **out);

// Build the complete k-partite graph with parts of size 3.
//
// # Safety
// `out` must be a valid pointer to an `McGraph*` slot.
enum McStatus mce_graph_moon_moser(uint64_t k, struct McGraph **out);

// Parse a DIMACS graph from a NUL-terminated string.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be a valid
// pointer to an `McGraph*` slot.
enum McStatus mce_graph_from_dimacs(const char *text, struct McGraph **out);

// Read and parse a DIMACS graph file.
//
// # Safety
// `path` must be a valid NUL-terminated string; `out` must be a valid
// pointer to an `McGraph*` slot.
enum McStatus mce_graph_from_dimacs_path(const char *path, struct McGraph **out);

// Destroy a graph created by this library. Null is a no-op.
//
// # Safety
// `graph` must be null or a pointer obtained from an `mce_graph_*`
// constructor, not yet freed.
void mce_graph_free(struct McGraph *graph);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle from this library.
uint64_t mce_graph_vertex_count(const struct McGraph *graph);

// Edge count, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle from this library.
uint64_t mce_graph_edge_count(const struct McGraph *graph);

// Count the maximal cliques of `graph` with the named strategy.
// `time_limit_ms` of 0 means no limit. `stats_out` may be null.
//
// # Safety
// `graph` must be a live handle; `strategy` must be a valid
// NUL-terminated string; `stats_out` must be null or valid.
enum McStatus mce_enumerate(const struct McGraph *graph,
                            const char *strategy,
                            uint64_t time_limit_ms,
                            struct McStats *stats_out);

// Enumerate maximal cliques, handing each to `callback` as an array
// of vertex labels. A nonzero callback return aborts the run.
// `time_limit_ms` of 0 means no limit. `stats_out` may be null.
//
// # Safety
// `graph` must be a live handle; `strategy` must be a valid
// NUL-terminated string; `callback` must be safe to call with the
// given `user` pointer for the duration of this call; `stats_out`
// must be null or valid.
enum McStatus mce_enumerate_with_callback(const struct McGraph *graph,
                                          const char *strategy,
                                          uint64_t time_limit_ms,
                                          McCliqueCallback callback,
                                          void *user,
                                          struct McStats *stats_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BITMCE_H */
