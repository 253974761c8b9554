#ifndef EQUICHAR_H
#define EQUICHAR_H

/* C interface to the equichar library. Every call that computes something
 * returns a status and hands back an opaque result, which owns the rendered
 * documents and must be released with equichar_result_free. Strings returned
 * by accessors live as long as the result. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EQUICHAR_API __declspec(dllexport)
#elif defined(__GNUC__)
#define EQUICHAR_API __attribute__((visibility("default")))
#else
#define EQUICHAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct equichar_result equichar_result;

typedef enum {
  EQUICHAR_OK = 0,
  EQUICHAR_VALIDATION_ERROR = 2, /* malformed input, out of bounds, invalid jumps */
  EQUICHAR_DOMAIN_ERROR = 3,     /* etale semidirect input, data that admits no module */
  EQUICHAR_INTERNAL_ERROR = 4    /* a consistency check or oracle relation failed */
} equichar_status;

typedef enum { EQUICHAR_FORMAT_JSON = 0, EQUICHAR_FORMAT_TEXT = 1 } equichar_format;

EQUICHAR_API const char* equichar_version(void);

/* verb: "cyclic", "semidirect", "superelliptic" or "validate".
 * input_json: the input document (UTF-8). *out is set whenever out is
 * non-null, also on failure. */
EQUICHAR_API equichar_status equichar_run(const char* verb, const char* input_json, equichar_result** out);

/* Randomized comparison against the matrix oracle. count random modules of
 * dimension at most min(sample_dim, max_dim). */
EQUICHAR_API equichar_status equichar_oracle_selfcheck(uint64_t seed, int64_t count, int64_t sample_dim,
                                                       int64_t max_dim, equichar_result** out);

EQUICHAR_API equichar_status equichar_result_status(const equichar_result* res);
EQUICHAR_API const char* equichar_result_document(const equichar_result* res, equichar_format fmt);
/* Empty on success. */
EQUICHAR_API const char* equichar_result_message(const equichar_result* res);
EQUICHAR_API const char* equichar_result_error_kind(const equichar_result* res);

/* Summands J_length(psi^socle)^multiplicity of the computed module, longest
 * first. Returns 0 on success, -1 if idx is out of range. */
EQUICHAR_API size_t equichar_result_entry_count(const equichar_result* res);
EQUICHAR_API int equichar_result_entry(const equichar_result* res, size_t idx, int64_t* socle, int64_t* length,
                                       int64_t* multiplicity);

EQUICHAR_API void equichar_result_free(equichar_result* res);

#ifdef __cplusplus
}
#endif

#endif
