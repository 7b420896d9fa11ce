// fibmap command-line front end. Talks to the library exclusively
// through the public C API.
//
// Exit codes: 0 all checks pass / output written; 1 check failure;
// 2 usage error; 3 resource cap exceeded; 4 conjecture-only failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fibmap/fibmap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitConjecture = 4;

int exit_code_for(fibmap_status st) {
    switch (st) {
        case FIBMAP_OK:
            return kExitOk;
        case FIBMAP_ERR_SCAN_CAP:
        case FIBMAP_ERR_RESOURCE_LIMIT:
            return kExitResource;
        case FIBMAP_ERR_INTERNAL:
            return kExitCheckFailure;
        default:
            return kExitUsage;
    }
}

int report_error(fibmap_status st) {
    std::cerr << "error: " << fibmap_status_name(st);
    const char* detail = fibmap_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    return exit_code_for(st);
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitUsage;
    }
    f << text;
    return f.good() ? kExitOk : kExitUsage;
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { fibmap_string_free(s); }
};

struct StreamGuard {
    fibmap_stream* s = nullptr;
    ~StreamGuard() { fibmap_stream_free(s); }
};

struct ReportGuard {
    fibmap_report* r = nullptr;
    ~ReportGuard() { fibmap_report_free(r); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

// --word accepts fib|tm|rs or @path to a JSON word document.
int open_word(const std::string& word, StreamGuard& stream, std::string* json_out) {
    if (!word.empty() && word[0] == '@') {
        std::string text;
        if (!read_file(word.substr(1), text)) {
            std::cerr << "error: cannot read " << word.substr(1) << "\n";
            return kExitUsage;
        }
        if (json_out) *json_out = text;
        fibmap_status st = fibmap_stream_open_json(text.c_str(), &stream.s);
        return st == FIBMAP_OK ? kExitOk : report_error(st);
    }
    fibmap_status st = fibmap_stream_open(word.c_str(), &stream.s);
    return st == FIBMAP_OK ? kExitOk : report_error(st);
}

int render_report(fibmap_report* rep, const std::string& format, const std::string& out_path,
                  bool conjectures_only_exit4 = true) {
    StringGuard text;
    fibmap_status st = fibmap_report_render(rep, format.c_str(), &text.s);
    if (st != FIBMAP_OK) return report_error(st);
    int rc = write_output(text.s, out_path);
    if (rc != kExitOk) return rc;
    if (!fibmap_report_core_passed(rep)) return kExitCheckFailure;
    if (conjectures_only_exit4 && fibmap_report_conjecture_failed(rep)) return kExitConjecture;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest monochromatic arithmetic progressions in the Fibonacci, "
                 "Thue-Morse and Rudin-Shapiro words"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fibmap_version());

    std::string word = "fib", format = "csv", out_path;
    std::uint64_t dmin = 1, dmax = 100, window = 0, scan_cap = 0, count = 10;
    std::uint64_t index = 0, kvalue = 2;
    unsigned threads = 1;

    auto* t_table = app.add_subcommand("table", "per-difference table of A(d) and i(d)");
    t_table->add_option("--word", word, "fib|tm|rs|@word.json");
    t_table->add_option("--dmin", dmin, "first difference");
    t_table->add_option("--dmax", dmax, "last difference");
    t_table->add_option("--window", window, "search window (0 = auto)");
    t_table->add_option("--scan-cap", scan_cap, "first-position scan cap");
    t_table->add_option("--threads", threads, "worker threads");
    t_table->add_option("--format", format, "csv|md|json");
    t_table->add_option("--out", out_path, "output file (default stdout)");

    auto* t_verify = app.add_subcommand(
        "verify", "closed form vs brute-force search over the Fibonacci word");
    t_verify->add_option("--dmax", dmax, "check all d up to this")->default_val(234);
    t_verify->add_option("--window", window, "minimum search window");
    t_verify->add_option("--threads", threads, "worker threads");
    std::string rformat = "text";
    t_verify->add_option("--format", rformat, "text|csv|json");
    t_verify->add_option("--out", out_path, "output file (default stdout)");

    auto* t_orbit = app.add_subcommand("orbit", "rotation-orbit dump as CSV");
    std::uint64_t orbit_i = 1, orbit_d = 1;
    t_orbit->add_option("-i,--start", orbit_i, "orbit start index")->required();
    t_orbit->add_option("-d,--difference", orbit_d, "difference")->required();
    t_orbit->add_option("-n,--count", count, "number of points")->required();
    t_orbit->add_option("--out", out_path, "output file (default stdout)");

    auto* t_levelset = app.add_subcommand("levelset",
                                          "exact step-distance interval(s) with A(d) = k");
    t_levelset->add_option("-k", kvalue, "progression length")->required();
    t_levelset->add_option("--dmax", dmax, "enumerate d up to this")->default_val(100);
    std::string lformat = "text";
    t_levelset->add_option("--format", lformat, "text|csv|json");
    t_levelset->add_option("--out", out_path, "output file (default stdout)");

    auto* t_density = app.add_subcommand("density", "closed-form density of {d : A(d)=k}");
    std::uint64_t kmin = 2, kmax = 0;
    t_density->add_option("--kmin", kmin, "first k");
    t_density->add_option("--kmax", kmax, "last k (default kmin)");
    std::uint64_t emp_dmax = 0;
    t_density->add_option("--empirical-dmax", emp_dmax, "also count over d <= this");
    std::string dformat = "text";
    t_density->add_option("--format", dformat, "text|csv|json");
    t_density->add_option("--out", out_path, "output file (default stdout)");

    auto* t_suite = app.add_subcommand("suite", "named verification suites");
    std::string suite_name;
    t_suite->add_option("name", suite_name, "fib|tm|rs|conjectures")->required();
    t_suite->add_option("--dmax", dmax, "override sweep bound")->default_val(0);
    t_suite->add_option("--window", window, "override search window");
    t_suite->add_option("--scan-cap", scan_cap, "override scan cap");
    std::string sformat = "text";
    t_suite->add_option("--format", sformat, "text|csv|json");
    t_suite->add_option("--out", out_path, "output file (default stdout)");

    auto* t_term = app.add_subcommand("term", "single letter of a word");
    t_term->add_option("--word", word, "fib|tm|rs|@word.json");
    t_term->add_option("-n,--index", index, "term index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (t_table->parsed()) {
        std::string json_doc;
        fibmap_table_opts opts{};
        opts.word = word.c_str();
        if (!word.empty() && word[0] == '@') {
            if (!read_file(word.substr(1), json_doc)) {
                std::cerr << "error: cannot read " << word.substr(1) << "\n";
                return kExitUsage;
            }
            opts.word = nullptr;
            opts.word_json = json_doc.c_str();
        }
        opts.d_min = dmin;
        opts.d_max = dmax;
        opts.window = window;
        opts.scan_cap = scan_cap;
        opts.threads = threads;
        opts.format = format.c_str();
        StringGuard text;
        fibmap_status st = fibmap_table_render(&opts, &text.s);
        if (st != FIBMAP_OK && !text.s) return report_error(st);
        int rc = write_output(text.s, out_path);
        if (rc != kExitOk) return rc;
        return st == FIBMAP_OK ? kExitOk : exit_code_for(st);
    }

    if (t_verify->parsed()) {
        ReportGuard rep;
        fibmap_status st = fibmap_verify_run(dmax, window, threads, &rep.r);
        if (st != FIBMAP_OK) return report_error(st);
        return render_report(rep.r, rformat, out_path);
    }

    if (t_orbit->parsed()) {
        StringGuard text;
        fibmap_status st = fibmap_orbit_render(orbit_i, orbit_d, count, &text.s);
        if (st != FIBMAP_OK) return report_error(st);
        return write_output(text.s, out_path);
    }

    if (t_levelset->parsed()) {
        StringGuard text;
        fibmap_status st = fibmap_levelset_render(kvalue, dmax, lformat.c_str(), &text.s);
        if (st != FIBMAP_OK) return report_error(st);
        return write_output(text.s, out_path);
    }

    if (t_density->parsed()) {
        if (kmax == 0) kmax = kmin;
        StringGuard text;
        fibmap_status st =
            fibmap_density_render(kmin, kmax, emp_dmax, dformat.c_str(), &text.s);
        if (st != FIBMAP_OK) return report_error(st);
        return write_output(text.s, out_path);
    }

    if (t_suite->parsed()) {
        fibmap_suite_opts opts{};
        opts.d_max = dmax;
        opts.window = window;
        opts.scan_cap = scan_cap;
        opts.threads = threads;
        ReportGuard rep;
        fibmap_status st = fibmap_suite_run(suite_name.c_str(), &opts, &rep.r);
        if (st != FIBMAP_OK) return report_error(st);
        return render_report(rep.r, sformat, out_path);
    }

    if (t_term->parsed()) {
        StreamGuard stream;
        std::string json_doc;
        int rc = open_word(word, stream, &json_doc);
        if (rc != kExitOk) return rc;
        char letter = 0;
        fibmap_status st = fibmap_stream_term(stream.s, index, &letter);
        if (st != FIBMAP_OK) return report_error(st);
        std::cout << letter << "\n";
        return kExitOk;
    }

    return kExitUsage;
}
