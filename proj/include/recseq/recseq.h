// Copyright 2026 The recseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the recseq library.
 *
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** are heap allocated and released with
 * rs_string_free. Every call that can fail returns an rs_status; on failure
 * rs_last_error() describes the problem (per thread).
 *
 * Scalars, polynomials, fields and pipelines use the text forms
 *   field     "Q" or "Q(sqrt 5)"          (NULL means Q)
 *   scalar    "-1/2", "sqrt(5)", "1/2+1/2*sqrt(5)"
 *   list      comma separated scalars
 *   poly      "t^2 - t - 1"
 *   pipeline  "I(1) . rho . I(1)"          (rightmost step applied first)
 */

#ifndef RECSEQ_RECSEQ_H
#define RECSEQ_RECSEQ_H

#include <stddef.h>

#if defined(RECSEQ_BUILDING)
#define RECSEQ_API __attribute__((visibility("default")))
#else
#define RECSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_PARSE = 1,
  RS_ERR_DIVISION_BY_ZERO = 2,
  RS_ERR_FIELD_MISMATCH = 3,
  RS_ERR_DOMAIN = 4,
  RS_ERR_INSUFFICIENT_DATA = 5,
  RS_ERR_INVALID_ARGUMENT = 6,
  RS_ERR_INTERNAL = 7
} rs_status;

typedef struct rs_lrs rs_lrs;
typedef struct rs_seq rs_seq;
typedef struct rs_pipeline rs_pipeline;

/* ---- errors and strings ------------------------------------------------ */

RECSEQ_API const char* rs_status_name(rs_status status);
/* Message of the last failed call on this thread ("" if none). */
RECSEQ_API const char* rs_last_error(void);
/* Offset into the parsed text for RS_ERR_PARSE, otherwise (size_t)-1. */
RECSEQ_API size_t rs_last_error_position(void);
RECSEQ_API void rs_string_free(char* s);
RECSEQ_API const char* rs_version(void);

/* ---- recurrences ------------------------------------------------------- */

RECSEQ_API rs_status rs_lrs_new(const char* char_poly, const char* init, const char* field, rs_lrs** out);
/* Initial conditions (0, ..., 0, 1). */
RECSEQ_API rs_status rs_lrs_impulse(const char* char_poly, const char* field, rs_lrs** out);
/* (1, 0, 0, ...) with characteristic polynomial t. */
RECSEQ_API rs_status rs_lrs_startsequence(rs_lrs** out);
/* {"char_poly": "...", "init": [...], "field": "..."} */
RECSEQ_API rs_status rs_lrs_from_json(const char* json, rs_lrs** out);
RECSEQ_API rs_status rs_lrs_to_json(const rs_lrs* s, char** out);
RECSEQ_API rs_status rs_lrs_char_poly(const rs_lrs* s, char** out);
RECSEQ_API size_t rs_lrs_order(const rs_lrs* s);
RECSEQ_API rs_status rs_lrs_terms(const rs_lrs* s, size_t count, rs_seq** out);
/* {"num": "...", "den": "..."} */
RECSEQ_API rs_status rs_lrs_genfun(const rs_lrs* s, char** out);
/* Generating function of I(x)(s) and the recurrence read off it:
 * {"num", "den", "char_poly", "valid_from"}. */
RECSEQ_API rs_status rs_lrs_invert_genfun(const rs_lrs* s, const char* x, char** out);
/* x = -h_r / u_{r-1}; RS_ERR_DOMAIN when u_{r-1} = 0. */
RECSEQ_API rs_status rs_lrs_degree_reduction(const rs_lrs* s, char** out);
RECSEQ_API void rs_lrs_free(rs_lrs* s);

/* ---- finite prefixes --------------------------------------------------- */

RECSEQ_API rs_status rs_seq_parse(const char* list, const char* field, rs_seq** out);
RECSEQ_API size_t rs_seq_length(const rs_seq* a);
RECSEQ_API rs_status rs_seq_term(const rs_seq* a, size_t index, char** out);
RECSEQ_API rs_status rs_seq_to_string(const rs_seq* a, const char* sep, char** out);
/* JSON array of scalar strings. */
RECSEQ_API rs_status rs_seq_to_json(const rs_seq* a, char** out);
/* 1 when both prefixes hold the same values, else 0. */
RECSEQ_API int rs_seq_equal(const rs_seq* a, const rs_seq* b);
/* Smallest recurrence holding on the prefix; RS_ERR_INSUFFICIENT_DATA when
 * the prefix is too short to decide. */
RECSEQ_API rs_status rs_seq_minimal_recurrence(const rs_seq* a, char** char_poly, size_t* valid_from);
RECSEQ_API void rs_seq_free(rs_seq* a);

/* ---- pipelines --------------------------------------------------------- */

RECSEQ_API rs_status rs_pipeline_parse(const char* text, const char* field, int left_to_right, rs_pipeline** out);
/* [{"op": "I", "param": "1"}, {"op": "rho"}, ...] in application order. */
RECSEQ_API rs_status rs_pipeline_from_json(const char* json, const char* field, rs_pipeline** out);
RECSEQ_API rs_status rs_pipeline_to_string(const rs_pipeline* p, char** out);
RECSEQ_API rs_status rs_pipeline_to_json(const rs_pipeline* p, char** out);
RECSEQ_API size_t rs_pipeline_length(const rs_pipeline* p);
/* Pipeline from the startsequence to the impulse sequence with the given
 * zeros (L steps) or recurrence coefficients h_1..h_r (I steps). */
RECSEQ_API rs_status rs_pipeline_l_construct(const char* zeros, const char* field, rs_pipeline** out);
RECSEQ_API rs_status rs_pipeline_i_construct(const char* coeffs, const char* field, rs_pipeline** out);
/* Pipeline from an impulse sequence back to the startsequence. */
RECSEQ_API rs_status rs_pipeline_l_deconstruct(const rs_lrs* s, const char* zeros, const char* field,
                                               rs_pipeline** out);
RECSEQ_API rs_status rs_pipeline_i_deconstruct(const rs_lrs* s, rs_pipeline** out);
/* trace (optional) receives [{"op": "I(1)", "char_poly": "..."}, ...]. */
RECSEQ_API rs_status rs_pipeline_apply_lrs(const rs_pipeline* p, const rs_lrs* s, rs_lrs** out, char** trace);
/* On prefixes the trace reports the minimal recurrence of each intermediate
 * prefix ("char_poly" is null when the prefix is too short). */
RECSEQ_API rs_status rs_pipeline_apply_seq(const rs_pipeline* p, const rs_seq* a, rs_seq** out, char** trace);
RECSEQ_API void rs_pipeline_free(rs_pipeline* p);

/* ---- identity checks ----------------------------------------------------
 * Each sets *ok to 1 or 0 and, when report is non-NULL, stores a JSON object
 * {"suite": ..., "checks": [{"name": ..., "ok": ...}], "ok": ...}. */

RECSEQ_API rs_status rs_verify_fib_antimean(size_t n_max, int* ok, char** report);
RECSEQ_API rs_status rs_verify_rbonacci_ladder(size_t r_max, size_t count, int* ok, char** report);
RECSEQ_API rs_status rs_verify_rbonacci_bell(size_t r_max, size_t n_max, int* ok, char** report);
RECSEQ_API rs_status rs_verify_polygonal(long q, size_t count, int* ok, char** report);
RECSEQ_API rs_status rs_verify_one_click(const char* poly, const char* field, size_t count, int* ok, char** report);

/* ---- tables and generators --------------------------------------------- */

/* Rows 0..max_n as a JSON array of arrays of integer strings.
 * kind 2: Stirling numbers of the second kind, kind 1: unsigned first kind. */
RECSEQ_API rs_status rs_table_stirling(int kind, size_t max_n, char** out);
/* Partial ordinary Bell polynomials B_{n,k}(args), rows n = 0..max_n. */
RECSEQ_API rs_status rs_table_bell(const rs_seq* args, size_t max_n, char** out);
/* T^(k)_h for k = 1..max_k, h = 0..count-1. */
RECSEQ_API rs_status rs_table_figurate(size_t max_k, size_t count, char** out);
/* Delta^0 f(0) .. Delta^order f(0) from values f(0), f(1), ... */
RECSEQ_API rs_status rs_table_differences(const rs_seq* values, size_t order, rs_seq** out);

/* P^(d)_q(0 .. count-1); d = 2 gives the polygonal numbers. */
RECSEQ_API rs_status rs_seq_polygonal(long q, long d, size_t count, rs_seq** out);
RECSEQ_API rs_status rs_seq_rbonacci(size_t r, size_t count, rs_seq** out);

#ifdef __cplusplus
}
#endif

#endif /* RECSEQ_RECSEQ_H */
