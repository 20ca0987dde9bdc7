#ifndef DEFINETTI_DEFINETTI_H
#define DEFINETTI_DEFINETTI_H

#include <stddef.h>

#if defined(_WIN32)
#define DFT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DFT_API __attribute__((visibility("default")))
#else
#define DFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Moment or cumulant table over words of length <= K in letters 1..n. */
typedef struct dft_table dft_table;
/* Result of a check: an outcome plus a JSON document. */
typedef struct dft_report dft_report;

typedef enum {
  DFT_OK = 0,
  DFT_ERR_INVALID_ARGUMENT = 1,
  DFT_ERR_PARSE = 2,
  DFT_ERR_CAPACITY = 3,
  DFT_ERR_INTERNAL = 4
} dft_status;

typedef enum { DFT_PASS = 0, DFT_FAIL = 1, DFT_INCONCLUSIVE = 2 } dft_outcome;

typedef enum { DFT_CLASSICAL = 0, DFT_FREE = 1, DFT_BOOLEAN = 2 } dft_kind;

typedef enum { DFT_MOMENTS_TO_CUMULANTS = 0, DFT_CUMULANTS_TO_MOMENTS = 1 } dft_direction;

DFT_API const char* dft_version(void);

/* Message for the most recent failing call on this thread; "" if none. */
DFT_API const char* dft_last_error(void);

/* Strings returned through char** out-parameters are released with dft_string_free. */
DFT_API void dft_string_free(char* s);

/* Tables. JSON: {"kind": "moment"|"classical"|"free"|"boolean", "n", "K",
   "entries": [{"word": [..], "num": "p", "den": "q"}]}. */
DFT_API dft_status dft_table_from_json(const char* json, dft_table** out);
DFT_API dft_status dft_table_to_json(const dft_table* table, char** out);
DFT_API void dft_table_free(dft_table* table);
/* is_moment is 1 for moment tables; kind is set only for cumulant tables. Null outputs are skipped. */
DFT_API dft_status dft_table_info(const dft_table* table, int* is_moment, dft_kind* kind, int* n, int* max_order);

/* Moments -> cumulants of `kind`, or cumulants -> moments (kind must match the table). */
DFT_API dft_status dft_transform(const dft_table* in, dft_kind kind, dft_direction direction, dft_table** out);

/* Joint moments of independent variables from single-variable cumulant tables of one kind. */
DFT_API dft_status dft_build_independent(const dft_table* const* marginals, size_t count, dft_table** out);

/* Set partitions of {1..k} in a family such as "p", "nc_2", "i_b". */
DFT_API dft_status dft_partitions(int k, const char* family, dft_report** out);

/* Mixed-cumulant vanishing test; tol is a rational string ("0" for exact). */
DFT_API dft_status dft_independence_test(const dft_table* moments, dft_kind kind, const char* tol, dft_report** out);

/* Distribution class of a single-variable cumulant table. */
DFT_API dft_status dft_classify(const dft_table* cumulants, const char* tol, dft_report** out);

/* Classical group invariance. config: {"group", "n", "K", "samples", "seed", "tol", "threads"}. */
DFT_API dft_status dft_symmetry_check(const dft_table* moments, const char* config_json, dft_report** out);

/* Quantum invariance certificates under a relation schema (n = number of letters). */
DFT_API dft_status dft_quantum_invariance(const dft_table* moments, const char* schema, int K, int degree_bound,
                                          dft_report** out);

/* Algebra verification. request: {"lemma": "relations"|"coproduct"|"vanishing"|"vanishing_all"|
   "membership"|"quotient", "schema", "n", "D", plus "pi", "j", "family", "max_k", "target",
   "cover" as the lemma requires}. */
DFT_API dft_status dft_verify(const char* request_json, dft_report** out);

DFT_API dft_outcome dft_report_outcome(const dft_report* report);
/* Owned by the report. */
DFT_API const char* dft_report_json(const dft_report* report);
DFT_API void dft_report_free(dft_report* report);

#ifdef __cplusplus
}
#endif

#endif
