#ifndef FIBMAP_CORE_TABLES_HPP
#define FIBMAP_CORE_TABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/fibanalysis.hpp"

namespace fibmap::tables {

struct TableOptions {
    std::string word = "fib";      // fib | tm | rs
    std::string word_json;         // when set: custom stream (substitution or machine)
    std::uint64_t d_min = 1;
    std::uint64_t d_max = 1;
    std::uint64_t window = 0;      // 0 = max(10^6, 64 d)
    std::uint64_t scan_cap = 10'000'000;
    unsigned threads = 1;
    std::string format = "csv";    // csv | md | json
};

struct TableRow {
    std::uint64_t d = 0;
    std::uint64_t a = 0;
    bool has_i = false;
    std::uint64_t i = 0;
    const char* method = "brute_force";
    bool saturated = false;
    std::string error;  // per-row failure (e.g. scan cap exceeded)
};

struct TableResult {
    std::vector<TableRow> rows;
    bool resource_exceeded = false;
};

// Per-difference statistics. The Fibonacci word uses the closed form
// plus a certified scan; other words use window-bounded search and
// report honest saturation.
TableResult compute_table(const TableOptions& opts);
std::string render_table(const TableResult& table, const std::string& format);

// Orbit dump, CSV schema: n,index,point_float,point_a,point_b,interval
std::string render_orbit_csv(std::uint64_t i, std::uint64_t d, std::uint64_t count);

// Exact level-set endpoints plus the differences d <= d_max in the set.
std::string render_levelset(long k, std::uint64_t d_max, const std::string& format);

// Closed-form densities for k_min..k_max, optionally with an empirical
// column over d <= empirical_dmax.
std::string render_density(long k_min, long k_max, std::uint64_t empirical_dmax,
                           const std::string& format);

}  // namespace fibmap::tables

#endif
