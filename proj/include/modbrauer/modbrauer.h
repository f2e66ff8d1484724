#ifndef MODBRAUER_H
#define MODBRAUER_H

/* C interface to the Brauer class computation.
 *
 * Every call returns an mb_status. On failure the message of the most recent
 * error on the calling thread is available from mb_last_error(). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with mb_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(MODBRAUER_BUILDING_LIBRARY)
#define MB_API __attribute__((visibility("default")))
#else
#define MB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mb_status {
  MB_OK = 0,
  MB_ERR_INVALID_ARGUMENT = 1,
  MB_ERR_PARSE = 2,
  MB_ERR_SCOPE = 3,
  MB_ERR_INSUFFICIENT_DATA = 4,
  MB_ERR_CONSISTENCY = 5,
  MB_ERR_IO = 6,
  MB_ERR_INTERNAL = 7,
  MB_ERR_INVARIANT = 8
} mb_status;

typedef struct mb_form mb_form;
typedef struct mb_class mb_class;

MB_API const char* mb_status_name(mb_status status);
/* Empty string when the last call on this thread succeeded. */
MB_API const char* mb_last_error(void);
MB_API void mb_string_free(char* s);

/* Forms */
MB_API mb_status mb_form_parse(const char* text, size_t len, mb_form** out);
MB_API mb_status mb_form_load(const char* path, mb_form** out);
MB_API void mb_form_free(mb_form* form);
/* Canonical text of the form file. */
MB_API mb_status mb_form_serialize(const mb_form* form, char** out);
/* Copy of the form keeping only the primes up to bound. */
MB_API mb_status mb_form_truncate(const mb_form* form, int64_t bound, mb_form** out);
MB_API mb_status mb_form_level(const mb_form* form, int64_t* out);
MB_API mb_status mb_form_weight(const mb_form* form, int* out);
/* Display name from the file, possibly empty. */
MB_API mb_status mb_form_name(const mb_form* form, char** out);

/* Brauer class */
MB_API mb_status mb_form_class(const mb_form* form, mb_class** out);
MB_API void mb_class_free(mb_class* cls);
MB_API size_t mb_class_finite_count(const mb_class* cls);
/* Ramified primes in ascending order; 0 when index is out of range. */
MB_API int64_t mb_class_finite_prime(const mb_class* cls, size_t index);
MB_API int mb_class_infinite(const mb_class* cls);
/* "finite: 2 3; infinite: no" */
MB_API mb_status mb_class_string(const mb_class* cls, char** out);
/* One line per evaluated place: "<place> <ramified|split> <source>". */
MB_API mb_status mb_class_provenance(const mb_class* cls, int pretty, char** out);

/* Consistency report and cocycle check. *passed is set to 1 when every check
 * holds; report lists one line per check. With strict set, an Unknown verdict
 * at an RPS prime counts as a failure. */
MB_API mb_status mb_form_check(const mb_form* form, double tolerance, int strict, int* passed,
                               char** report);

/* Label of the form among the orbits of a peer file. */
MB_API mb_status mb_form_label(const mb_form* form, const char* peer_path, int pretty, char** out);

/* Places where the Hilbert symbol (a, b) is -1, space separated. a and b are
 * nonzero rationals written "n" or "n/d". */
MB_API mb_status mb_symbols(const char* a, const char* b, int pretty, char** out);

/* Every *.json form in dir, labelled against dir/peers. */
MB_API mb_status mb_table_dir(const char* dir, int64_t bound, int pretty, int machine, char** out);
/* "<file> <label>" per form in dir. */
MB_API mb_status mb_label_dir(const char* dir, int pretty, char** out);

#ifdef __cplusplus
}
#endif

#endif
