/* sigmatau.h - C interface to the sigma/tau extremal-statistics library.
 *
 * All entry points are reentrant for distinct contexts; a single context must
 * not be used from two threads at once. Strings returned through char** are
 * heap-allocated and must be released with st_string_free. On a nonzero
 * return, st_last_error(ctx) describes the failure until the next call on the
 * same context.
 */
#ifndef SIGMATAU_H
#define SIGMATAU_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct st_context st_context;

enum {
    ST_OK = 0,
    ST_EINVAL = 1,  /* bad argument or configuration */
    ST_ERANGE = 2,  /* past the sieved or representable range */
    ST_EDOMAIN = 3, /* outside the mathematical domain */
    ST_ETIE = 4,    /* two critical values too close to order reliably */
    ST_EFAIL = 5,   /* internal failure */
};

/* sieve_limit = 0 selects the default (2,500,000). */
int st_context_new(uint64_t sieve_limit, st_context** out);
void st_context_free(st_context* ctx);

const char* st_last_error(const st_context* ctx);
uint64_t st_sieve_limit(const st_context* ctx);

void st_string_free(char* s);

/* Champions whose creating critical value is >= eps_min (a decimal string,
 * e.g. "0.0096"). format is "csv" or "json". */
int st_champions(st_context* ctx, const char* eps_min, const char* format, char** out);

/* All n within benefit `budget` of the champion at the eps_index-th critical
 * value (1-based), as CSV. Requires 0 <= budget < eps * log 2. */
int st_benefit_enum(st_context* ctx, uint32_t eps_index, const char* budget, char** out);

/* nu(threshold): how many n >= 2 have f1(n) >= threshold. Returns a small
 * JSON object with the count and enumeration metadata. */
int st_census(st_context* ctx, const char* threshold, char** out);

/* Run a verification pipeline: "theorem1", "theorem2", "theorem3",
 * "inequalities" or "all". heavy != 0 enables the claims needing a 1e8 sieve.
 * format is "json" or "text". *failures receives the failed-claim count. */
int st_verify(st_context* ctx, const char* pipeline, int heavy, const char* format, char** out,
              int* failures);

/* Scatter of (log tau, log sigma/n) over 1..limit plus the champion vertex
 * chain bounding it from above. */
int st_hull(st_context* ctx, uint64_t limit, char** points_csv, char** vertices_csv);

#ifdef __cplusplus
}
#endif

#endif /* SIGMATAU_H */
