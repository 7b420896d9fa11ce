/* fibmap — longest monochromatic arithmetic progressions in the
 * Fibonacci, Thue-Morse and Rudin-Shapiro words.
 *
 * C API over the C++ core. Conventions:
 *   - every function returns a fibmap_status; FIBMAP_OK is 0
 *   - objects are opaque handles, released with the matching _free()
 *   - strings returned through char** are heap-allocated by the library
 *     and must be released with fibmap_string_free()
 *   - fibmap_last_error() describes the most recent failure on the
 *     calling thread
 *
 * Handles are not internally synchronized: do not share a stream handle
 * across threads without external locking. Distinct handles are safe to
 * use concurrently.
 */
#ifndef FIBMAP_FIBMAP_H
#define FIBMAP_FIBMAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FIBMAP_API __declspec(dllexport)
#else
#define FIBMAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fibmap_status {
    FIBMAP_OK = 0,
    FIBMAP_ERR_INVALID_ARGUMENT = 1,
    FIBMAP_ERR_INVALID_ZECKENDORF = 2,
    FIBMAP_ERR_DIGIT_OUT_OF_RANGE = 3,
    FIBMAP_ERR_UNKNOWN_LETTER = 4,
    FIBMAP_ERR_NOT_EXTENDABLE = 5,
    FIBMAP_ERR_UNKNOWN_NAME = 6,
    FIBMAP_ERR_PRECONDITION = 7,
    FIBMAP_ERR_SCAN_CAP = 8,
    FIBMAP_ERR_RESOURCE_LIMIT = 9,
    FIBMAP_ERR_PARSE = 10,
    FIBMAP_ERR_DIVISION_BY_ZERO = 11,
    FIBMAP_ERR_RANGE = 12,
    FIBMAP_ERR_INTERNAL = 13
} fibmap_status;

typedef struct fibmap_stream fibmap_stream;
typedef struct fibmap_dfao fibmap_dfao;
typedef struct fibmap_report fibmap_report;

FIBMAP_API const char* fibmap_version(void);
FIBMAP_API const char* fibmap_status_name(fibmap_status status);

/* Message for the last failure on this thread ("" if none). The pointer
 * stays valid until the next failing call on the same thread. */
FIBMAP_API const char* fibmap_last_error(void);

FIBMAP_API void fibmap_string_free(char* s);

/* ---- numeration ------------------------------------------------- */

/* Digits are written msd-first as characters '0'.., 'a'.. for >= 10.
 * buf receives a NUL-terminated digit string; *out_len excludes the NUL. */
FIBMAP_API fibmap_status fibmap_zeck_encode(uint64_t n, char* buf, size_t buf_size,
                                            size_t* out_len);
FIBMAP_API fibmap_status fibmap_zeck_decode(const char* digits, uint64_t* out_n);
FIBMAP_API fibmap_status fibmap_base_encode(uint64_t n, unsigned base, char* buf,
                                            size_t buf_size, size_t* out_len);
FIBMAP_API fibmap_status fibmap_base_decode(const char* digits, unsigned base,
                                            uint64_t* out_n);

/* ---- words / symbol streams ------------------------------------- */

/* name: "fib", "tm" or "rs" */
FIBMAP_API fibmap_status fibmap_stream_open(const char* name, fibmap_stream** out);

/* JSON: either a substitution document
 *   {"alphabet": ["0","1"], "rules": {"0":"01","1":"0"}, "seed": "0",
 *    "coding": {...}?}
 * or an automaton document (see fibmap_dfao_open_json). */
FIBMAP_API fibmap_status fibmap_stream_open_json(const char* json_text, fibmap_stream** out);

FIBMAP_API fibmap_status fibmap_stream_term(fibmap_stream* s, uint64_t n, char* out_letter);

/* Copies the first `length` letters into buf and NUL-terminates it;
 * buf_size must be at least length + 1. */
FIBMAP_API fibmap_status fibmap_stream_prefix(fibmap_stream* s, uint64_t length, char* buf,
                                              size_t buf_size);
FIBMAP_API fibmap_status fibmap_stream_set_max_prefix(fibmap_stream* s, uint64_t cap);
FIBMAP_API void fibmap_stream_free(fibmap_stream* s);

/* ---- automata ---------------------------------------------------- */

/* name: "fib" (Zeckendorf input) or "tm" (binary input) */
FIBMAP_API fibmap_status fibmap_dfao_open_builtin(const char* name, fibmap_dfao** out);

/* {"states":[...], "sigma":[0,1], "delta":[[q,digit,q'],...], "q0":...,
 *  "coding":{"q":"letter",...}, "numeration":"base-k"|"zeckendorf"} */
FIBMAP_API fibmap_status fibmap_dfao_open_json(const char* json_text, fibmap_dfao** out);
FIBMAP_API fibmap_status fibmap_dfao_to_json(const fibmap_dfao* m, char** out_json);

/* Evaluates an msd-first digit string such as "10100". */
FIBMAP_API fibmap_status fibmap_dfao_eval(const fibmap_dfao* m, const char* digits,
                                          char* out_letter);
FIBMAP_API fibmap_status fibmap_dfao_term(const fibmap_dfao* m, uint64_t n, char* out_letter);
FIBMAP_API void fibmap_dfao_free(fibmap_dfao* m);

/* ---- golden-ratio arithmetic ------------------------------------ */

FIBMAP_API fibmap_status fibmap_floor_mult_tau(uint64_t d, uint64_t* out_floor);

/* {d*tau} and g(d) as displays; the _str variants return the exact value
 * in the canonical "(a+b*tau)/den" form. */
FIBMAP_API fibmap_status fibmap_frac_mult_tau(uint64_t d, double* out_value);
FIBMAP_API fibmap_status fibmap_step_distance(uint64_t d, double* out_value);
FIBMAP_API fibmap_status fibmap_step_distance_str(uint64_t d, char** out_exact);

/* *out_right = 1 when {d*tau} < 1/2 (stepping right), else 0. */
FIBMAP_API fibmap_status fibmap_step_direction(uint64_t d, int* out_right);

FIBMAP_API fibmap_status fibmap_rotation_term(uint64_t m, char* out_letter);

/* ---- Fibonacci-word analysis ------------------------------------ */

FIBMAP_API fibmap_status fibmap_fib_longest_map(uint64_t d, uint64_t* out_a);

/* Arbitrary-size variant; d in decimal, result in decimal. */
FIBMAP_API fibmap_status fibmap_fib_longest_map_str(const char* d_decimal, char** out_a_decimal);

FIBMAP_API fibmap_status fibmap_fib_first_position(uint64_t d, uint64_t scan_cap,
                                                   uint64_t* out_i);
FIBMAP_API fibmap_status fibmap_fib_density(uint64_t k, double* out_density);
FIBMAP_API fibmap_status fibmap_fib_empirical_density(uint64_t k, uint64_t d_max,
                                                      double* out_density);
FIBMAP_API fibmap_status fibmap_pisano_period(uint64_t k, uint64_t* out_period);
FIBMAP_API fibmap_status fibmap_rank_of_apparition(uint64_t k, uint64_t* out_rank);

/* ---- progression search ------------------------------------------ */

typedef struct fibmap_search_result {
    uint64_t best_len;
    uint64_t first_pos;
    int saturated;
} fibmap_search_result;

FIBMAP_API fibmap_status fibmap_search_longest(fibmap_stream* s, uint64_t d, uint64_t window,
                                               fibmap_search_result* out);
FIBMAP_API fibmap_status fibmap_search_first(fibmap_stream* s, uint64_t d, uint64_t len,
                                             uint64_t cap, uint64_t* out_pos);
FIBMAP_API fibmap_status fibmap_search_has_map(fibmap_stream* s, uint64_t d, uint64_t i,
                                               uint64_t len, int* out_has);

/* ---- reports and renderers --------------------------------------- */

typedef struct fibmap_table_opts {
    const char* word;       /* "fib" | "tm" | "rs"; NULL means "fib" */
    const char* word_json;  /* optional custom word document */
    uint64_t d_min;
    uint64_t d_max;
    uint64_t window;        /* 0: max(10^6, 64 d) */
    uint64_t scan_cap;      /* 0: 10^7 */
    unsigned threads;       /* 0: 1 */
    const char* format;     /* "csv" | "md" | "json"; NULL means csv */
} fibmap_table_opts;

/* Renders the per-difference table (columns d,A,i,method,saturated).
 * Returns FIBMAP_ERR_SCAN_CAP when some row hit a resource cap; the
 * rendered text is still produced in that case. */
FIBMAP_API fibmap_status fibmap_table_render(const fibmap_table_opts* opts, char** out_text);

FIBMAP_API fibmap_status fibmap_orbit_render(uint64_t i, uint64_t d, uint64_t count,
                                             char** out_csv);
FIBMAP_API fibmap_status fibmap_levelset_render(uint64_t k, uint64_t d_max, const char* format,
                                                char** out_text);
FIBMAP_API fibmap_status fibmap_density_render(uint64_t k_min, uint64_t k_max,
                                               uint64_t empirical_dmax, const char* format,
                                               char** out_text);

typedef struct fibmap_suite_opts {
    uint64_t d_max;    /* 0: suite default */
    uint64_t window;   /* 0: suite default */
    uint64_t scan_cap; /* 0: suite default */
    unsigned threads;  /* verify only; 0: 1 */
} fibmap_suite_opts;

/* name: "fib", "tm", "rs" or "conjectures". opts may be NULL. */
FIBMAP_API fibmap_status fibmap_suite_run(const char* name, const fibmap_suite_opts* opts,
                                          fibmap_report** out);

/* Closed form vs window-bounded search for every d <= d_max. */
FIBMAP_API fibmap_status fibmap_verify_run(uint64_t d_max, uint64_t window, unsigned threads,
                                           fibmap_report** out);

typedef struct fibmap_check_view {
    const char* id;
    const char* claim;
    const char* observed;
    const char* expected;
    int pass;
    const char* kind; /* "certified" | "bounded" | "conjecture" */
} fibmap_check_view;

FIBMAP_API size_t fibmap_report_size(const fibmap_report* r);

/* Pointers in the view stay valid until fibmap_report_free. */
FIBMAP_API fibmap_status fibmap_report_check(const fibmap_report* r, size_t index,
                                             fibmap_check_view* out);
FIBMAP_API int fibmap_report_core_passed(const fibmap_report* r);
FIBMAP_API int fibmap_report_conjecture_failed(const fibmap_report* r);

/* format: "text" | "csv" | "json" */
FIBMAP_API fibmap_status fibmap_report_render(const fibmap_report* r, const char* format,
                                              char** out_text);
FIBMAP_API void fibmap_report_free(fibmap_report* r);

#ifdef __cplusplus
}
#endif

#endif /* FIBMAP_FIBMAP_H */
