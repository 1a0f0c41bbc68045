#ifndef MCGSPIN_H
#define MCGSPIN_H

/*
 * C interface to the mcgspin library.
 *
 * Every function returns an mcg_status. On failure the thread-local last
 * error (message and, for script diagnostics, a 1-based line and column) is
 * set. Strings returned through char** are owned by the caller and released
 * with mcg_string_free. Handles are released with their *_free function;
 * passing NULL to a free function is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MCG_API __declspec(dllexport)
#else
#define MCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcg_status {
  MCG_OK = 0,
  MCG_E_INVALID_ARGUMENT = 1, /* null pointer or out-of-range argument */
  MCG_E_PARSE = 2,            /* syntax error in script, form, presentation or JSON */
  MCG_E_DIMENSION = 3,        /* genus or vector-length mismatch */
  MCG_E_PRECONDITION = 4,     /* operation precondition violated */
  MCG_E_NOT_FOUND = 5,        /* undeclared name, unknown label or builtin */
  MCG_E_UNAVAILABLE = 6,      /* data needed for the request is absent */
  MCG_E_OVERFLOW = 7,         /* exact integer result exceeds 64 bits */
  MCG_E_GUARD = 8,            /* request exceeds a documented size guard */
  MCG_E_INTERNAL = 9          /* unexpected failure; a bug */
} mcg_status;

typedef struct mcg_factorization mcg_factorization;
typedef struct mcg_form mcg_form;
typedef struct mcg_script mcg_script;

MCG_API const char* mcg_version(void);
MCG_API const char* mcg_status_name(mcg_status status);

/* Last error on the calling thread. The message is empty after success. */
MCG_API const char* mcg_last_error_message(void);
/* 0 when the last error has no source position. */
MCG_API size_t mcg_last_error_line(void);
MCG_API size_t mcg_last_error_column(void);

MCG_API void mcg_string_free(char* s);

/* ---- factorizations ---- */

/* name is one of "P", "U", "V", "VU", "Z"; k is used by "Z" only. */
MCG_API mcg_status mcg_factorization_builtin(const char* name, int genus, int k, mcg_factorization** out);
/* Canonical JSON: {genus, boundary_power, twists:[{label, mod2, int}], provenance, family}. */
MCG_API mcg_status mcg_factorization_from_json(const char* json, mcg_factorization** out);
MCG_API mcg_status mcg_factorization_to_json(const mcg_factorization* p, char** out);
MCG_API mcg_status mcg_factorization_genus(const mcg_factorization* p, int* out);
MCG_API mcg_status mcg_factorization_length(const mcg_factorization* p, size_t* out);
MCG_API mcg_status mcg_factorization_boundary_power(const mcg_factorization* p, int* out);
/* p1 followed by p2 with no conjugation; boundary powers add. */
MCG_API mcg_status mcg_factorization_fiber_sum(const mcg_factorization* p1, const mcg_factorization* p2,
                                               mcg_factorization** out);
MCG_API void mcg_factorization_free(mcg_factorization* p);

/* ---- quadratic forms ---- */

/* Assignments such as "x*:1 y1:1 y3:1"; unspecified basis values are 0. */
MCG_API mcg_status mcg_form_parse(int genus, const char* text, mcg_form** out);
MCG_API mcg_status mcg_form_to_text(const mcg_form* q, char** out);
MCG_API mcg_status mcg_form_arf(const mcg_form* q, int* out);
/* q evaluated on a sparse class such as "x1+y3". */
MCG_API mcg_status mcg_form_evaluate(const mcg_form* q, const char* sparse_class, int* out);
MCG_API void mcg_form_free(mcg_form* q);

/* ---- certificates ----
 * Each writes a canonical JSON certificate to *json and the boolean verdict
 * (1 pass, 0 fail) to *verdict. */

/* q may be NULL: all-ones form for P, alternating form otherwise. */
MCG_API mcg_status mcg_certify_spin(const mcg_factorization* p, const mcg_form* q, char** json, int* verdict);
MCG_API mcg_status mcg_certify_relation(const mcg_factorization* p, char** json, int* verdict);
/* signature: "meyer", "endo", "paper" or NULL for automatic choice. */
MCG_API mcg_status mcg_certify_invariants(const mcg_factorization* p, const char* signature, char** json,
                                          int* verdict);
MCG_API mcg_status mcg_certify_h1(const mcg_factorization* p, char** json, int* verdict);
MCG_API mcg_status mcg_certify_geography(int64_t max_m, char** json, int* verdict);
MCG_API mcg_status mcg_geography_tsv(int64_t max_m, char** out);
MCG_API mcg_status mcg_geography_plot_data(int64_t max_m, char** out);
MCG_API mcg_status mcg_certify_theorem_a(const char* presentation, char** json, int* verdict);
MCG_API mcg_status mcg_certify_theorem_b(int genus, int k, char** json, int* verdict);
/* JSON array of certificates; verdict is 1 when every item passes. */
MCG_API mcg_status mcg_verify_paper(char** json, int* verdict);
/* *same is 1 when the two certificate documents agree ignoring tool versions. */
MCG_API mcg_status mcg_compare_certificates(const char* actual, const char* expected, int* same);

/* ---- scripts ---- */

MCG_API mcg_status mcg_script_parse(const char* text, mcg_script** out);
MCG_API mcg_status mcg_script_to_text(const mcg_script* s, char** out);
MCG_API mcg_status mcg_script_statement_count(const mcg_script* s, size_t* out);
/* JSON array with one certificate per query. */
MCG_API mcg_status mcg_script_run(const mcg_script* s, char** json, int* verdict);
MCG_API void mcg_script_free(mcg_script* s);

#ifdef __cplusplus
}
#endif

#endif /* MCGSPIN_H */
