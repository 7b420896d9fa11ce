#include "fibmap/fibmap.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "core/automata.hpp"
#include "core/errors.hpp"
#include "core/fibanalysis.hpp"
#include "core/golden.hpp"
#include "core/mapsearch.hpp"
#include "core/numeration.hpp"
#include "core/suites.hpp"
#include "core/tables.hpp"
#include "core/words.hpp"

struct fibmap_stream {
    std::unique_ptr<fibmap::words::SymbolStream> impl;
};

struct fibmap_dfao {
    fibmap::automata::Dfao impl;
};

struct fibmap_report {
    fibmap::report::SuiteReport impl;
};

namespace {

thread_local std::string t_last_error;

fibmap_status fail(fibmap_status code, const char* what) {
    t_last_error = what ? what : "";
    return code;
}

fibmap_status translate(const std::exception& e) {
    using namespace fibmap;
    if (dynamic_cast<const InvalidZeckendorf*>(&e)) return fail(FIBMAP_ERR_INVALID_ZECKENDORF, e.what());
    if (dynamic_cast<const DigitOutOfRange*>(&e)) return fail(FIBMAP_ERR_DIGIT_OUT_OF_RANGE, e.what());
    if (dynamic_cast<const UnknownLetter*>(&e)) return fail(FIBMAP_ERR_UNKNOWN_LETTER, e.what());
    if (dynamic_cast<const NotExtendable*>(&e)) return fail(FIBMAP_ERR_NOT_EXTENDABLE, e.what());
    if (dynamic_cast<const UnknownName*>(&e)) return fail(FIBMAP_ERR_UNKNOWN_NAME, e.what());
    if (dynamic_cast<const PreconditionViolated*>(&e)) return fail(FIBMAP_ERR_PRECONDITION, e.what());
    if (dynamic_cast<const ScanCapExceeded*>(&e)) return fail(FIBMAP_ERR_SCAN_CAP, e.what());
    if (dynamic_cast<const ResourceLimit*>(&e)) return fail(FIBMAP_ERR_RESOURCE_LIMIT, e.what());
    if (dynamic_cast<const ParseError*>(&e)) return fail(FIBMAP_ERR_PARSE, e.what());
    if (dynamic_cast<const DivisionByZero*>(&e)) return fail(FIBMAP_ERR_DIVISION_BY_ZERO, e.what());
    if (dynamic_cast<const InvalidArgument*>(&e)) return fail(FIBMAP_ERR_INVALID_ARGUMENT, e.what());
    if (dynamic_cast<const std::bad_alloc*>(&e)) return fail(FIBMAP_ERR_RESOURCE_LIMIT, "out of memory");
    return fail(FIBMAP_ERR_INTERNAL, e.what());
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fibmap_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return translate(e);
    } catch (...) {
        return fail(FIBMAP_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fibmap_status copy_digits(const std::string& s, char* buf, size_t buf_size, size_t* out_len) {
    if (!buf || buf_size < s.size() + 1)
        return fail(FIBMAP_ERR_INVALID_ARGUMENT, "buffer too small for digit word");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    if (out_len) *out_len = s.size();
    return FIBMAP_OK;
}

bool u64_mul_tau_fits(uint64_t d) {
    // floor(d*tau) < 2^64 requires d <= ~1.14e19/1.62; stay conservative.
    return d <= 11'400'000'000'000'000'000ull / 2;
}

}  // namespace

extern "C" {

const char* fibmap_version(void) { return "1.0.0"; }

const char* fibmap_status_name(fibmap_status status) {
    switch (status) {
        case FIBMAP_OK: return "ok";
        case FIBMAP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FIBMAP_ERR_INVALID_ZECKENDORF: return "invalid zeckendorf word";
        case FIBMAP_ERR_DIGIT_OUT_OF_RANGE: return "digit out of range";
        case FIBMAP_ERR_UNKNOWN_LETTER: return "unknown letter";
        case FIBMAP_ERR_NOT_EXTENDABLE: return "seed not extendable";
        case FIBMAP_ERR_UNKNOWN_NAME: return "unknown name";
        case FIBMAP_ERR_PRECONDITION: return "precondition violated";
        case FIBMAP_ERR_SCAN_CAP: return "scan cap exceeded";
        case FIBMAP_ERR_RESOURCE_LIMIT: return "resource limit";
        case FIBMAP_ERR_PARSE: return "parse error";
        case FIBMAP_ERR_DIVISION_BY_ZERO: return "division by zero";
        case FIBMAP_ERR_RANGE: return "result out of range";
        case FIBMAP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fibmap_last_error(void) { return t_last_error.c_str(); }

void fibmap_string_free(char* s) { delete[] s; }

/* ---- numeration ------------------------------------------------- */

fibmap_status fibmap_zeck_encode(uint64_t n, char* buf, size_t buf_size, size_t* out_len) {
    return guarded([&] {
        auto w = fibmap::numeration::zeck_encode(n);
        return copy_digits(fibmap::numeration::digits_to_string(w.digits), buf, buf_size, out_len);
    });
}

fibmap_status fibmap_zeck_decode(const char* digits, uint64_t* out_n) {
    return guarded([&] {
        if (!digits || !out_n) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        fibmap::numeration::ZeckWord w;
        w.digits = fibmap::numeration::digits_from_string(digits, 2);
        *out_n = fibmap::numeration::zeck_decode(w);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_base_encode(uint64_t n, unsigned base, char* buf, size_t buf_size,
                                 size_t* out_len) {
    return guarded([&] {
        auto w = fibmap::numeration::base_encode(n, base);
        return copy_digits(fibmap::numeration::digits_to_string(w.digits), buf, buf_size, out_len);
    });
}

fibmap_status fibmap_base_decode(const char* digits, unsigned base, uint64_t* out_n) {
    return guarded([&] {
        if (!digits || !out_n) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        fibmap::numeration::BaseKWord w;
        w.base = base;
        w.digits = fibmap::numeration::digits_from_string(digits, base);
        *out_n = fibmap::numeration::base_decode(w);
        return FIBMAP_OK;
    });
}

/* ---- streams ------------------------------------------------------ */

fibmap_status fibmap_stream_open(const char* name, fibmap_stream** out) {
    return guarded([&] {
        if (!name || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out = new fibmap_stream{fibmap::words::make_stream(name)};
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_stream_open_json(const char* json_text, fibmap_stream** out) {
    return guarded([&] {
        if (!json_text || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out = new fibmap_stream{fibmap::words::make_stream_json(json_text)};
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_stream_term(fibmap_stream* s, uint64_t n, char* out_letter) {
    return guarded([&] {
        if (!s || !out_letter) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_letter = s->impl->term(n);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_stream_prefix(fibmap_stream* s, uint64_t length, char* buf,
                                   size_t buf_size) {
    return guarded([&] {
        if (!s || !buf) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        if (buf_size < length + 1)
            return fail(FIBMAP_ERR_INVALID_ARGUMENT, "buffer too small for prefix");
        auto view = s->impl->prefix(static_cast<std::size_t>(length));
        std::memcpy(buf, view.data(), view.size());
        buf[view.size()] = '\0';
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_stream_set_max_prefix(fibmap_stream* s, uint64_t cap) {
    return guarded([&] {
        if (!s) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        s->impl->set_max_prefix(cap);
        return FIBMAP_OK;
    });
}

void fibmap_stream_free(fibmap_stream* s) { delete s; }

/* ---- automata ------------------------------------------------------ */

fibmap_status fibmap_dfao_open_builtin(const char* name, fibmap_dfao** out) {
    return guarded([&] {
        if (!name || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out = new fibmap_dfao{fibmap::automata::builtin(name)};
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_dfao_open_json(const char* json_text, fibmap_dfao** out) {
    return guarded([&] {
        if (!json_text || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out = new fibmap_dfao{fibmap::automata::dfao_from_json(json_text)};
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_dfao_to_json(const fibmap_dfao* m, char** out_json) {
    return guarded([&] {
        if (!m || !out_json) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_json = dup_string(fibmap::automata::dfao_to_json(m->impl));
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_dfao_eval(const fibmap_dfao* m, const char* digits, char* out_letter) {
    return guarded([&] {
        if (!m || !digits || !out_letter)
            return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        auto w = fibmap::numeration::digits_from_string(digits, m->impl.num_digits);
        *out_letter = m->impl.eval(w);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_dfao_term(const fibmap_dfao* m, uint64_t n, char* out_letter) {
    return guarded([&] {
        if (!m || !out_letter) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_letter = m->impl.term(n);
        return FIBMAP_OK;
    });
}

void fibmap_dfao_free(fibmap_dfao* m) { delete m; }

/* ---- golden ratio arithmetic ---------------------------------------- */

fibmap_status fibmap_floor_mult_tau(uint64_t d, uint64_t* out_floor) {
    return guarded([&] {
        if (!out_floor) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        if (!u64_mul_tau_fits(d)) return fail(FIBMAP_ERR_RANGE, "floor(d*tau) exceeds 64 bits");
        mpz_class f = fibmap::golden::floor_mult_tau(mpz_class(static_cast<unsigned long>(d)));
        *out_floor = f.get_ui();
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_frac_mult_tau(uint64_t d, double* out_value) {
    return guarded([&] {
        if (!out_value) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_value =
            fibmap::golden::frac_mult_tau(mpz_class(static_cast<unsigned long>(d))).to_double();
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_step_distance(uint64_t d, double* out_value) {
    return guarded([&] {
        if (!out_value) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_value =
            fibmap::golden::step_distance(mpz_class(static_cast<unsigned long>(d))).to_double();
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_step_distance_str(uint64_t d, char** out_exact) {
    return guarded([&] {
        if (!out_exact) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_exact = dup_string(
            fibmap::golden::step_distance(mpz_class(static_cast<unsigned long>(d))).to_string());
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_step_direction(uint64_t d, int* out_right) {
    return guarded([&] {
        if (!out_right) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        auto dir = fibmap::golden::step_direction(mpz_class(static_cast<unsigned long>(d)));
        *out_right = dir == fibmap::golden::StepDirection::right ? 1 : 0;
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_rotation_term(uint64_t m, char* out_letter) {
    return guarded([&] {
        if (!out_letter) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_letter = fibmap::golden::rotation_term(m);
        return FIBMAP_OK;
    });
}

/* ---- Fibonacci analysis ---------------------------------------------- */

fibmap_status fibmap_fib_longest_map(uint64_t d, uint64_t* out_a) {
    return guarded([&] {
        if (!out_a) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_a = fibmap::fibanalysis::longest_map_u64(d);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_fib_longest_map_str(const char* d_decimal, char** out_a_decimal) {
    return guarded([&] {
        if (!d_decimal || !out_a_decimal)
            return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        mpz_class d;
        if (d.set_str(d_decimal, 10) != 0)
            return fail(FIBMAP_ERR_PARSE, "not a decimal integer");
        *out_a_decimal = dup_string(fibmap::fibanalysis::longest_map(d).get_str());
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_fib_first_position(uint64_t d, uint64_t scan_cap, uint64_t* out_i) {
    return guarded([&] {
        if (!out_i) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_i = fibmap::fibanalysis::first_position(d, scan_cap ? scan_cap : 10'000'000);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_fib_density(uint64_t k, double* out_density) {
    return guarded([&] {
        if (!out_density) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_density = fibmap::fibanalysis::density(static_cast<long>(k));
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_fib_empirical_density(uint64_t k, uint64_t d_max, double* out_density) {
    return guarded([&] {
        if (!out_density) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_density = fibmap::fibanalysis::empirical_density(static_cast<long>(k), d_max);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_pisano_period(uint64_t k, uint64_t* out_period) {
    return guarded([&] {
        if (!out_period) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_period = fibmap::fibanalysis::pisano_period(k);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_rank_of_apparition(uint64_t k, uint64_t* out_rank) {
    return guarded([&] {
        if (!out_rank) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_rank = fibmap::fibanalysis::rank_of_apparition(k);
        return FIBMAP_OK;
    });
}

/* ---- search --------------------------------------------------------- */

fibmap_status fibmap_search_longest(fibmap_stream* s, uint64_t d, uint64_t window,
                                    fibmap_search_result* out) {
    return guarded([&] {
        if (!s || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        if (window == 0) window = fibmap::mapsearch::default_window(d);
        auto res = fibmap::mapsearch::longest_in_window(*s->impl, d, window);
        out->best_len = res.best_len;
        out->first_pos = res.first_pos;
        out->saturated = res.saturated ? 1 : 0;
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_search_first(fibmap_stream* s, uint64_t d, uint64_t len, uint64_t cap,
                                  uint64_t* out_pos) {
    return guarded([&] {
        if (!s || !out_pos) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_pos = fibmap::mapsearch::first_occurrence(*s->impl, d, len, cap);
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_search_has_map(fibmap_stream* s, uint64_t d, uint64_t i, uint64_t len,
                                    int* out_has) {
    return guarded([&] {
        if (!s || !out_has) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_has = fibmap::mapsearch::has_map(*s->impl, d, i, len) ? 1 : 0;
        return FIBMAP_OK;
    });
}

/* ---- renderers -------------------------------------------------------- */

fibmap_status fibmap_table_render(const fibmap_table_opts* opts, char** out_text) {
    return guarded([&] {
        if (!opts || !out_text) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        fibmap::tables::TableOptions o;
        if (opts->word) o.word = opts->word;
        if (opts->word_json) o.word_json = opts->word_json;
        o.d_min = opts->d_min;
        o.d_max = opts->d_max;
        o.window = opts->window;
        o.scan_cap = opts->scan_cap ? opts->scan_cap : 10'000'000;
        o.threads = opts->threads;
        if (opts->format) o.format = opts->format;
        auto table = fibmap::tables::compute_table(o);
        *out_text = dup_string(fibmap::tables::render_table(table, o.format));
        if (table.resource_exceeded)
            return fail(FIBMAP_ERR_SCAN_CAP, "some rows exceeded a resource cap");
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_orbit_render(uint64_t i, uint64_t d, uint64_t count, char** out_csv) {
    return guarded([&] {
        if (!out_csv) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_csv = dup_string(fibmap::tables::render_orbit_csv(i, d, count));
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_levelset_render(uint64_t k, uint64_t d_max, const char* format,
                                     char** out_text) {
    return guarded([&] {
        if (!out_text) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_text = dup_string(fibmap::tables::render_levelset(
            static_cast<long>(k), d_max, format ? format : "text"));
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_density_render(uint64_t k_min, uint64_t k_max, uint64_t empirical_dmax,
                                    const char* format, char** out_text) {
    return guarded([&] {
        if (!out_text) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_text = dup_string(fibmap::tables::render_density(
            static_cast<long>(k_min), static_cast<long>(k_max), empirical_dmax,
            format ? format : "text"));
        return FIBMAP_OK;
    });
}

/* ---- suites ----------------------------------------------------------- */

fibmap_status fibmap_suite_run(const char* name, const fibmap_suite_opts* opts,
                               fibmap_report** out) {
    return guarded([&] {
        if (!name || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        std::string suite = name;
        fibmap::report::SuiteReport rep;
        if (suite == "fib") {
            fibmap::suites::FibBounds b;
            if (opts && opts->d_max) {
                b.levelset_dmax = opts->d_max;
                b.density_dmax = opts->d_max;
                b.families_dmax = std::min<uint64_t>(opts->d_max, 10'000);
                b.equivalence_terms = opts->d_max;
            }
            if (opts && opts->scan_cap) b.scan_cap = opts->scan_cap;
            rep = fibmap::suites::run_suite_fib(b);
        } else if (suite == "tm") {
            fibmap::suites::TmBounds b;
            if (opts && opts->d_max) b.odd_dmax = opts->d_max;
            if (opts && opts->window) b.window = opts->window;
            rep = fibmap::suites::run_suite_tm(b);
        } else if (suite == "rs") {
            fibmap::suites::RsBounds b;
            if (opts && opts->window) b.window = opts->window;
            rep = fibmap::suites::run_suite_rs(b);
        } else if (suite == "conjectures") {
            fibmap::suites::ConjBounds b;
            if (opts && opts->scan_cap) b.scan_cap = opts->scan_cap;
            if (opts && opts->d_max) b.slope_dmax = opts->d_max;
            rep = fibmap::suites::run_suite_conjectures(b);
        } else {
            return fail(FIBMAP_ERR_UNKNOWN_NAME, "unknown suite");
        }
        *out = new fibmap_report{std::move(rep)};
        return FIBMAP_OK;
    });
}

fibmap_status fibmap_verify_run(uint64_t d_max, uint64_t window, unsigned threads,
                                fibmap_report** out) {
    return guarded([&] {
        if (!out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out = new fibmap_report{fibmap::suites::run_verify(d_max, window, threads)};
        return FIBMAP_OK;
    });
}

size_t fibmap_report_size(const fibmap_report* r) { return r ? r->impl.checks.size() : 0; }

fibmap_status fibmap_report_check(const fibmap_report* r, size_t index,
                                  fibmap_check_view* out) {
    return guarded([&] {
        if (!r || !out) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        if (index >= r->impl.checks.size())
            return fail(FIBMAP_ERR_INVALID_ARGUMENT, "check index out of range");
        const auto& c = r->impl.checks[index];
        out->id = c.id.c_str();
        out->claim = c.claim.c_str();
        out->observed = c.observed.c_str();
        out->expected = c.expected.c_str();
        out->pass = c.pass ? 1 : 0;
        out->kind = fibmap::report::kind_name(c.kind);
        return FIBMAP_OK;
    });
}

int fibmap_report_core_passed(const fibmap_report* r) {
    return r && r->impl.core_passed() ? 1 : 0;
}

int fibmap_report_conjecture_failed(const fibmap_report* r) {
    return r && r->impl.conjecture_failed() ? 1 : 0;
}

fibmap_status fibmap_report_render(const fibmap_report* r, const char* format,
                                   char** out_text) {
    return guarded([&] {
        if (!r || !out_text) return fail(FIBMAP_ERR_INVALID_ARGUMENT, "null argument");
        *out_text = dup_string(r->impl.render(format ? format : "text"));
        return FIBMAP_OK;
    });
}

void fibmap_report_free(fibmap_report* r) { delete r; }

}  // extern "C"
