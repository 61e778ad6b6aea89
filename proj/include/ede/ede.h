/* C interface to the exponential Diophantine equation solver.
 *
 * Every function returns an ede_status. On failure the message is available
 * from ede_last_error() on the same thread until the next call. Objects are
 * opaque; release them with the matching *_free function. Strings and tuple
 * arrays handed out by the library are freed with ede_string_free and
 * ede_tuples_free.
 */
#ifndef EDE_EDE_H
#define EDE_EDE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EDE_BUILDING_LIBRARY)
#define EDE_API __declspec(dllexport)
#else
#define EDE_API __declspec(dllimport)
#endif
#else
#define EDE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ede_status {
  EDE_OK = 0,
  EDE_ERR_PARSE = 1,     /* malformed spec file, polynomial, DOT or JSON */
  EDE_ERR_INPUT = 2,     /* unusable mathematics, e.g. singular conjugator */
  EDE_ERR_STRUCTURE = 3, /* operands of mismatched shape or ring */
  EDE_ERR_RANGE = 4,     /* tuple arity, digit or overflow */
  EDE_ERR_ALPHABET = 5,  /* automaton and equation disagree on the alphabet */
  EDE_ERR_CAPACITY = 6,  /* state cap, alphabet cap or oracle work cap */
  EDE_ERR_ARGUMENT = 7,  /* null pointer or unknown enum value */
  EDE_ERR_INTERNAL = 8
} ede_status;

typedef enum ede_format { EDE_FORMAT_DOT = 0, EDE_FORMAT_JSON = 1 } ede_format;

typedef struct ede_system ede_system;
typedef struct ede_automaton ede_automaton;

EDE_API const char* ede_last_error(void);
/* States discovered when the last failure was EDE_ERR_CAPACITY, else 0. */
EDE_API size_t ede_last_error_count(void);
EDE_API const char* ede_status_name(ede_status status);

EDE_API ede_status ede_system_parse(const char* json_text, ede_system** out);
EDE_API ede_status ede_system_load(const char* path, ede_system** out);
EDE_API void ede_system_free(ede_system* sys);

/* order is 0 for the scalar ring and the companion order otherwise. */
EDE_API ede_status ede_system_info(const ede_system* sys, uint32_t* p, size_t* r, size_t* t,
                                   size_t* order);
/* Exhaustive verification depth used when the caller has no preference. */
EDE_API size_t ede_system_default_max_len(const ede_system* sys);

/* state_cap 0 selects the library default. */
EDE_API ede_status ede_build(const ede_system* sys, size_t state_cap, ede_automaton** out);
EDE_API void ede_automaton_free(ede_automaton* a);
EDE_API size_t ede_automaton_num_states(const ede_automaton* a);
EDE_API size_t ede_automaton_width(const ede_automaton* a);

EDE_API ede_status ede_automaton_export(const ede_automaton* a, ede_format format, char** out);
EDE_API ede_status ede_automaton_import(const char* text, ede_format format, ede_automaton** out);

/* Runs the minimal base-p encoding of the tuple through the automaton. */
EDE_API ede_status ede_accepts_tuple(const ede_automaton* a, const uint64_t* tuple, size_t len,
                                     int* accepted);
EDE_API ede_status ede_is_empty(const ede_automaton* a, int* empty);

/* Distinct tuples decoded from accepted words of length <= max_len, sorted.
 * The result is count rows of ede_automaton_width() entries each. */
EDE_API ede_status ede_enumerate_solutions(const ede_automaton* a, size_t max_len,
                                           uint64_t** tuples, size_t* count);

/* Direct substitution into the equations. */
EDE_API ede_status ede_is_solution(const ede_system* sys, const uint64_t* tuple, size_t len,
                                   int* solution);

/* Compares the automaton with direct substitution on every word up to
 * max_len. report_json may be NULL. */
EDE_API ede_status ede_verify(const ede_system* sys, const ede_automaton* a, size_t max_len,
                              char** report_json, size_t* mismatches);

EDE_API void ede_string_free(char* s);
EDE_API void ede_tuples_free(uint64_t* tuples);

#ifdef __cplusplus
}
#endif

#endif
