/* SPDX-License-Identifier: Apache-2.0 */
#ifndef GERMLAB_H
#define GERMLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they match the CLI exit-code contract. */
#define GERMLAB_OK 0
#define GERMLAB_ERR_MISMATCH 1      /* not equivalent / parity disagreement */
#define GERMLAB_ERR_INPUT 2         /* parse or malformed input */
#define GERMLAB_ERR_DEGENERATE 3    /* 0-dimensional germ */
#define GERMLAB_ERR_PRECONDITION 4  /* operation precondition violated */
#define GERMLAB_ERR_INTERNAL 5

/*
 * All functions return a status code. When a JSON document was produced it is
 * stored in *out_json (NUL-terminated, release with germlab_string_free); a
 * document may be present even for GERMLAB_ERR_MISMATCH, which reports a
 * negative verdict rather than a failure to compute. On error *err_msg (when
 * non-NULL) receives a message, also owned by the caller.
 *
 * kind selects the input form: "poly" (expression text in x, y) or "param"
 * (JSON document {"branches": [["t^2", "t^3"], ...]}).
 */

int germlab_analyze(const char* kind, const char* text, int with_oracle,
                    char** out_json, char** err_msg);

/* Status GERMLAB_OK iff blow-spherically equivalent. */
int germlab_compare(const char* kind_a, const char* text_a, const char* kind_b,
                    const char* text_b, char** out_json, char** err_msg);

/* invariant_json: {"rows": [[r_minus, r_zero, r_plus], ...]}. With verify
 * nonzero the realization is re-analyzed; a round-trip failure yields
 * GERMLAB_ERR_MISMATCH. */
int germlab_realize(const char* invariant_json, int verify, char** out_json,
                    char** err_msg);

/* link_file_json: {"circles": [...]} as in the fixture format.
 * request_json: {"euler": bool, "diameter": bool, "parity": bool,
 *   "parity_point": ["0","0","1"], "antipodal": bool, "nac": bool,
 *   "cycle_cap": int, "distances": [[point, point], ...]}.
 * The environment variable GERMLAB_CYCLE_CAP supplies the nac cycle cap when
 * the request does not set one (default 10000). */
int germlab_link(const char* link_file_json, const char* request_json,
                 char** out_json, char** err_msg);

void germlab_string_free(char* s);

const char* germlab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GERMLAB_H */
