#ifndef QCROSS_QCROSS_H
#define QCROSS_QCROSS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QCROSS_API __attribute__((visibility("default")))
#else
#define QCROSS_API
#endif

typedef enum qcross_status {
  QCROSS_OK = 0,
  QCROSS_E_INVALID_ARGUMENT,
  QCROSS_E_NOT_DIVISIBLE,
  QCROSS_E_NOT_INVERTIBLE,
  QCROSS_E_NON_CONVERGENCE,
  QCROSS_E_PARSE,
  QCROSS_E_INVALID_HISTOIRE,
  QCROSS_E_INVALID_PATH,
  QCROSS_E_HEIGHT_MISMATCH,
  QCROSS_E_NOT_IN_C,
  QCROSS_E_TOO_LARGE,
  QCROSS_E_GUARD_EXCEEDED,
  QCROSS_E_PARITY_MISMATCH,
  QCROSS_E_INTERNAL
} qcross_status;

/* Immutable polynomial in q, y, t, a, b, c, d with integer coefficients. */
typedef struct qcross_poly qcross_poly;

QCROSS_API const char* qcross_version(void);
QCROSS_API const char* qcross_status_name(qcross_status status);
/* Message of the last failed call on this thread; empty after a success. */
QCROSS_API const char* qcross_last_error(void);
/* Frees strings returned through char** out-parameters. */
QCROSS_API void qcross_string_free(char* s);

QCROSS_API qcross_status qcross_poly_parse(const char* text, qcross_poly** out);
QCROSS_API void qcross_poly_free(qcross_poly* p);
QCROSS_API qcross_status qcross_poly_to_string(const qcross_poly* p, char** out);
QCROSS_API qcross_status qcross_poly_to_json(const qcross_poly* p, char** out);
QCROSS_API int qcross_poly_equal(const qcross_poly* lhs, const qcross_poly* rhs);
QCROSS_API qcross_status qcross_poly_add(const qcross_poly* lhs, const qcross_poly* rhs, qcross_poly** out);
QCROSS_API qcross_status qcross_poly_mul(const qcross_poly* lhs, const qcross_poly* rhs, qcross_poly** out);

/* family: hermite, charlier, charlier*, laguerre. method: brute, paths, formula. */
QCROSS_API qcross_status qcross_moments(const char* family, int n, const char* method, unsigned jobs, int unsafe_n,
                                        qcross_poly** out);
/* name: a family or touchard, qstirling, trinomial, ballot, prefix, schroeder; k < 0 for none. */
QCROSS_API qcross_status qcross_formula(const char* name, int n, int k, int unsafe_n, qcross_poly** out);
/* K-series as a polynomial in t. method: cf, closed, hypergeometric, functional. */
QCROSS_API qcross_status qcross_expand(const char* family, int order, const char* method, int symbolic, int unsafe_n,
                                       qcross_poly** out);

/* Runs a verification suite. *passed is 1 when every case passed. text and
   json may be NULL. */
QCROSS_API qcross_status qcross_verify(const char* suite, int max_n, unsigned jobs, int timings, int* passed,
                                       char** text, char** json);

/* JSON results. family may be NULL for decompose (symbolic a, b, c, d). */
QCROSS_API qcross_status qcross_decompose(const char* path_text, const char* family, char** json);
QCROSS_API qcross_status qcross_histoire(const char* family, const char* object_text, char** json);
QCROSS_API qcross_status qcross_object(const char* family, const char* path_text, char** json);
QCROSS_API qcross_status qcross_theta(const char* word, char** json);

/* kind: touchard, charlier, charlier*, laguerre, qstirling, ballot, prefix. format: csv, json. */
QCROSS_API qcross_status qcross_table(const char* kind, int from, int max_n, const char* format, int unsafe_n,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif
