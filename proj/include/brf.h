#ifndef BRF_H
#define BRF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Solver for maximum independent sets and minimum hitting sets of
 * bicolored rectangular families: every axis-parallel rectangle with its
 * bottom-left corner in point set A and its top-right corner in point set
 * B, optionally restricted to a region. All functions return a status;
 * results come back through out-parameters. Strings returned through
 * char** are owned by the caller and released with brf_string_free. */

typedef enum brf_status {
  BRF_OK = 0,
  BRF_ERR_INVALID_INSTANCE = 1,
  BRF_ERR_PARSE = 2,
  BRF_ERR_MISSING_POINT = 3,
  BRF_ERR_EMPTY_RANGE = 4,
  BRF_ERR_NO_WITNESS = 5,
  BRF_ERR_EMPTY_CHAIN_INTERSECTION = 6,
  BRF_ERR_ILLEGAL_FLIP = 7,
  BRF_ERR_NOT_PERMUTATION = 8,
  BRF_ERR_DUPLICATE_CORNER = 9,
  BRF_ERR_TOO_LARGE = 10,
  BRF_ERR_UNSUPPORTED_REGION = 11,
  BRF_ERR_VERIFY_FAILED = 12,
  BRF_ERR_INTERNAL = 13
} brf_status;

typedef struct brf_instance brf_instance;
typedef struct brf_solution brf_solution;

/* Message for the most recent failure on this thread; empty when the last
 * call succeeded. The pointer stays valid until the next call. */
const char* brf_last_error(void);

void brf_string_free(char* s);
void brf_instance_free(brf_instance* inst);
void brf_solution_free(brf_solution* sol);

/* Instance construction. Documents are JSON; see the README for the
 * formats. brf_instance_reduce consumes a rectangle-list document and
 * builds the weighted instance whose optimum equals the list's maximum
 * number of pairwise disjoint members. */
brf_status brf_instance_parse(const char* json_text, brf_instance** out);
brf_status brf_instance_generate(const char* kind, int size, uint64_t seed,
                                 int with_weights, brf_instance** out);
brf_status brf_instance_reduce(const char* rects_json, brf_instance** out);
brf_status brf_instance_to_json(const brf_instance* inst, char** out);

/* Size of the normalized grid (|A| + |B|). */
brf_status brf_instance_n(const brf_instance* inst, int* out);

/* Unweighted solve: a maximum independent set and a minimum hitting set of
 * equal size, plus diagnostics. check_monotonicity re-validates the flip
 * invariant after every flip (debug aid, quadratic overhead). */
brf_status brf_solve(const brf_instance* inst, int check_monotonicity,
                     brf_solution** out);
brf_status brf_solution_sizes(const brf_solution* sol, int* mis_size, int* mhs_size);
/* timing_ms < 0 omits the timing field, keeping output reproducible. */
brf_status brf_solution_to_json(const brf_solution* sol, double timing_ms,
                                char** out);

/* Re-check a solution document against the instance. BRF_OK when every
 * certificate holds; BRF_ERR_VERIFY_FAILED with a newline-separated report
 * in *report_out (when non-NULL) otherwise. */
brf_status brf_verify_solution(const brf_instance* inst, const char* solution_json,
                               char** report_out);

/* Exhaustive ground truth for small instances (at most cap minimal
 * members; cap <= 0 selects the default of 25). */
brf_status brf_oracle_check(const brf_instance* inst, int cap, int* mis_out,
                            int* mhs_out);

/* Weighted maximum independent set for bipartite permutation instances;
 * result document carries the value and the chosen (aIndex, bIndex) pairs. */
brf_status brf_wmis(const brf_instance* inst, char** result_json);

/* Exact rational relaxation check; rect_cap <= 0 selects the default 100. */
brf_status brf_lp_check(const brf_instance* inst, int rect_cap, char** result_json);

/* Graph view for unrestricted instances: cross-free matching plus one
 * biclique per hitting point, covering every edge. */
brf_status brf_biclique_cover(const brf_instance* inst, char** result_json);

/* Enumeration statistics without solving: minimal member count, greedy
 * family size, its intersection edges, stabbing lines, and the size bound. */
brf_status brf_stats(const brf_instance* inst, char** result_json);

/* sol may be NULL to draw the bare instance. */
brf_status brf_render_svg(const brf_instance* inst, const brf_solution* sol,
                          char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* BRF_H */
