/*
 * C interface to gsslab: generalized self-shrinking sequence families over
 * primitive GF(2) polynomials, their least periods, the short-period
 * subspace B' and its cosets, and the exhaustive n >= 4 bound check.
 *
 * Conventions:
 *  - Every function returns a gsslab_status; on failure gsslab_last_error()
 *    holds a message for the calling thread until its next failing call.
 *  - Polynomials are 64-bit masks, bit i = coefficient of x^i.
 *  - Bit strings are '0'/'1', first character = index 0.
 *  - Strings returned through char** are heap-allocated; release them with
 *    gsslab_string_free. Handles are released with their *_free function.
 *    Free functions accept NULL.
 */
#ifndef GSSLAB_GSSLAB_H
#define GSSLAB_GSSLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSSLAB_API __declspec(dllexport)
#else
#define GSSLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsslab_status {
  GSSLAB_OK = 0,
  GSSLAB_E_PARSE = 1,
  GSSLAB_E_INVALID = 2,
  GSSLAB_E_RANGE = 3,
  GSSLAB_E_NOT_PRIMITIVE = 4,
  GSSLAB_E_INVARIANT = 5,
  GSSLAB_E_NOMEM = 6,
  GSSLAB_E_INTERNAL = 7
} gsslab_status;

typedef enum gsslab_format {
  GSSLAB_FORMAT_TABLE = 0,
  GSSLAB_FORMAT_JSON = 1,
  GSSLAB_FORMAT_CSV = 2
} gsslab_format;

typedef struct gsslab_mseq gsslab_mseq;
typedef struct gsslab_family gsslab_family;
typedef struct gsslab_stats gsslab_stats;
typedef struct gsslab_report gsslab_report;

GSSLAB_API const char* gsslab_last_error(void);
GSSLAB_API const char* gsslab_status_name(gsslab_status status);
GSSLAB_API void gsslab_string_free(char* s);

/* Honors GSSLAB_MAX_DEGREE (2..16). */
GSSLAB_API gsslab_status gsslab_max_degree(int* out);
GSSLAB_API gsslab_status gsslab_parse_format(const char* name, gsslab_format* out);

/* Polynomials */
GSSLAB_API gsslab_status gsslab_poly_parse(const char* text, uint64_t* mask);
GSSLAB_API gsslab_status gsslab_poly_render(uint64_t mask, char** out);
GSSLAB_API gsslab_status gsslab_poly_reciprocal(uint64_t mask, uint64_t* out);
/* *primitive receives 0/1; *reason (optional, may be NULL) the failed condition. */
GSSLAB_API gsslab_status gsslab_poly_is_primitive(uint64_t mask, int* primitive, char** reason);
/* Writes up to cap masks ascending; *count receives the total. */
GSSLAB_API gsslab_status gsslab_primitive_polys(int degree, uint64_t* masks, size_t cap, size_t* count);
GSSLAB_API gsslab_status gsslab_primitives_render(int degree, gsslab_format fmt, char** out);

/* m-sequences. seed may be NULL (all ones). */
GSSLAB_API gsslab_status gsslab_mseq_generate(uint64_t mask, const char* seed, gsslab_mseq** out);
GSSLAB_API gsslab_status gsslab_mseq_reverse(const gsslab_mseq* rec, gsslab_mseq** out);
GSSLAB_API gsslab_status gsslab_mseq_bits(const gsslab_mseq* rec, char** out);
GSSLAB_API gsslab_status gsslab_mseq_poly(const gsslab_mseq* rec, uint64_t* mask);
GSSLAB_API gsslab_status gsslab_mseq_render(const gsslab_mseq* rec, gsslab_format fmt, char** out);
GSSLAB_API void gsslab_mseq_free(gsslab_mseq* rec);

/* Least period of an arbitrary bit string. */
GSSLAB_API gsslab_status gsslab_least_period(const char* bits, size_t* out);

/* Families B(a); members indexed by listing position. */
GSSLAB_API gsslab_status gsslab_family_build(const gsslab_mseq* rec, gsslab_family** out);
GSSLAB_API gsslab_status gsslab_family_size(const gsslab_family* fam, size_t* out);
GSSLAB_API gsslab_status gsslab_family_member(const gsslab_family* fam, size_t index, char** g, char** bits,
                                              size_t* least_period);
/* Listing index of member b(g). */
GSSLAB_API gsslab_status gsslab_family_index_of(const gsslab_family* fam, const char* g, size_t* index);
GSSLAB_API gsslab_status gsslab_family_render(const gsslab_family* fam, gsslab_format fmt, char** out);
GSSLAB_API void gsslab_family_free(gsslab_family* fam);

/* Coset b(g) + sub, as ascending member indices. sub == NULL means B'.
 * Writes up to cap indices; *count receives the coset size. */
GSSLAB_API gsslab_status gsslab_coset_of(const gsslab_family* fam, const char* g, const size_t* sub, size_t sub_len,
                                         size_t* indices, size_t cap, size_t* count);

/* Family statistics */
GSSLAB_API gsslab_status gsslab_stats_compute(const gsslab_family* fam, gsslab_stats** out);
GSSLAB_API gsslab_status gsslab_stats_b_prime_size(const gsslab_stats* st, size_t* out);
GSSLAB_API gsslab_status gsslab_stats_fraction(const gsslab_stats* st, uint64_t* num, uint64_t* den);
GSSLAB_API gsslab_status gsslab_stats_coset_count(const gsslab_stats* st, size_t* out);
/* Number of members whose least period equals period. */
GSSLAB_API gsslab_status gsslab_stats_period_count(const gsslab_stats* st, size_t period, size_t* out);
GSSLAB_API gsslab_status gsslab_stats_render(const gsslab_stats* st, gsslab_format fmt, char** out);
GSSLAB_API void gsslab_stats_free(gsslab_stats* st);

/* Exhaustive verification over degrees [min_degree, max_degree].
 * jobs <= 0 uses hardware concurrency; all_seeds sweeps every nonzero seed. */
GSSLAB_API gsslab_status gsslab_verify(int min_degree, int max_degree, int jobs, int all_seeds, gsslab_report** out);
/* *pass receives 1 for PASS, 0 for FAIL. */
GSSLAB_API gsslab_status gsslab_report_pass(const gsslab_report* rep, int* pass);
GSSLAB_API gsslab_status gsslab_report_row_count(const gsslab_report* rep, size_t* out);
GSSLAB_API gsslab_status gsslab_report_row(const gsslab_report* rep, size_t i, int* n, uint64_t* mask, uint64_t* num,
                                           uint64_t* den, size_t* cosets);
GSSLAB_API gsslab_status gsslab_report_render(const gsslab_report* rep, gsslab_format fmt, char** out);
GSSLAB_API void gsslab_report_free(gsslab_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* GSSLAB_GSSLAB_H */
