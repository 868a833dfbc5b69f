#ifndef SWAPALG_SWAPALG_H
#define SWAPALG_SWAPALG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SWAPALG_API __declspec(dllexport)
#else
#define SWAPALG_API __attribute__((visibility("default")))
#endif

typedef enum swapalg_status {
  SWAPALG_OK = 0,
  SWAPALG_ERR_PARSE = 1,
  SWAPALG_ERR_DEGREE_MISMATCH = 2,
  SWAPALG_ERR_OUT_OF_RANGE = 3,
  SWAPALG_ERR_INVALID_ARGUMENT = 4,
  SWAPALG_ERR_DEGREE_CAP = 5,
  SWAPALG_ERR_VERIFICATION = 6,
  SWAPALG_ERR_INTERNAL = 7,
  SWAPALG_ERR_NULL = 8
} swapalg_status;

typedef enum swapalg_format { SWAPALG_FORMAT_TEXT = 0, SWAPALG_FORMAT_JSON = 1 } swapalg_format;

typedef struct swapalg_element swapalg_element;
typedef struct swapalg_trace swapalg_trace;

/* Message of the last failed call on this thread ("" if none). */
SWAPALG_API const char* swapalg_last_error(void);
SWAPALG_API const char* swapalg_status_name(swapalg_status status);
/* Frees strings returned through char** out-parameters. */
SWAPALG_API void swapalg_string_free(char* s);

SWAPALG_API int swapalg_degree_cap(void);
SWAPALG_API swapalg_status swapalg_set_degree_cap(int cap);

/* degree 0 infers the degree from the text. */
SWAPALG_API swapalg_status swapalg_element_parse(const char* text, int degree, swapalg_element** out);
SWAPALG_API void swapalg_element_free(swapalg_element* x);
SWAPALG_API int swapalg_element_degree(const swapalg_element* x);
SWAPALG_API swapalg_status swapalg_element_format(const swapalg_element* x, swapalg_format format, char** out);

/* trace may be NULL. */
SWAPALG_API swapalg_status swapalg_specialize(const swapalg_element* x, int normalize_leftover, swapalg_element** out,
                                              swapalg_trace** trace);
SWAPALG_API swapalg_status swapalg_straighten(const swapalg_element* x, swapalg_element** out, swapalg_trace** trace);
SWAPALG_API swapalg_status swapalg_symmetric_to_involutions(const swapalg_element* x, swapalg_element** out);
SWAPALG_API swapalg_status swapalg_partial_trace(const swapalg_element* x, int i, swapalg_element** out);

SWAPALG_API void swapalg_trace_free(swapalg_trace* t);
SWAPALG_API swapalg_status swapalg_trace_format(const swapalg_trace* t, swapalg_format format, char** out);
/* Replays the trace and checks every step and the end result against the
   operator oracle. Returns SWAPALG_ERR_VERIFICATION on a mismatch, with
   *failed_step set to the 0-based step index (or the step count when only
   the end result differs) and *report describing it. On success
   *failed_step is -1. report may be NULL. */
SWAPALG_API swapalg_status swapalg_trace_verify(const swapalg_trace* t, int64_t* failed_step, char** report);

/* Sets *equal to 1 when x and y act identically on (F^2)^{(x)n}. */
SWAPALG_API swapalg_status swapalg_equal_in_sigma(const swapalg_element* x, const swapalg_element* y, int* equal);

/* family: "all", "involutions", "specials", "3good", "transpositions-plus-id". */
SWAPALG_API swapalg_status swapalg_gram_rank_family(const char* family, int n, uint64_t* rank);

SWAPALG_API swapalg_status swapalg_rsk(const char* permutation, int degree, int d, swapalg_format format, char** out);
/* basis: "pauli" or "units". */
SWAPALG_API swapalg_status swapalg_basis_expand(const swapalg_element* x, const char* basis, swapalg_format format,
                                                char** out);

typedef void (*swapalg_line_callback)(const char* line, void* user);
/* Runs the acceptance checks. In text format on_line receives one line per
   check as it finishes; in JSON format it receives one document at the end.
   *all_passed is set to 1 when every check passed. */
SWAPALG_API swapalg_status swapalg_reproduce(int big, swapalg_format format, swapalg_line_callback on_line, void* user,
                                             int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
