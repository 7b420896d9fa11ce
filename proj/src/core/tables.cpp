#include "core/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "core/mapsearch.hpp"

namespace fibmap::tables {

namespace {

std::unique_ptr<words::SymbolStream> open_stream(const TableOptions& opts) {
    if (!opts.word_json.empty()) return words::make_stream_json(opts.word_json);
    return words::make_stream(opts.word);
}

void fill_fib_row(TableRow& row, std::uint64_t d, std::uint64_t scan_cap,
                  words::SymbolStream& fib) {
    row.a = fibanalysis::longest_map_u64(d);
    row.method = "closed_form";
    row.saturated = false;
    try {
        row.i = fibanalysis::first_position(d, scan_cap, &fib);
        row.has_i = true;
    } catch (const ScanCapExceeded& e) {
        row.error = e.what();
    }
}

void fill_search_row(TableRow& row, std::uint64_t d, std::uint64_t window,
                     words::SymbolStream& seq) {
    if (window == 0) window = mapsearch::default_window(d);
    auto res = mapsearch::longest_in_window(seq, d, window);
    row.a = res.best_len;
    row.i = res.first_pos;
    row.has_i = true;
    row.method = "brute_force";
    row.saturated = res.saturated;
}

}  // namespace

TableResult compute_table(const TableOptions& opts) {
    if (opts.d_min < 1 || opts.d_min > opts.d_max)
        throw InvalidArgument("table: need 1 <= d_min <= d_max");
    const bool fib = opts.word_json.empty() && opts.word == "fib";
    const std::uint64_t count = opts.d_max - opts.d_min + 1;

    TableResult out;
    out.rows.resize(count);

    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        auto stream = open_stream(opts);
        for (std::uint64_t d = lo; d <= hi; ++d) {
            TableRow& row = out.rows[d - opts.d_min];
            row.d = d;
            try {
                if (fib)
                    fill_fib_row(row, d, opts.scan_cap, *stream);
                else
                    fill_search_row(row, d, opts.window, *stream);
            } catch (const Error& e) {
                row.error = e.what();
            }
        }
    };

    unsigned threads = opts.threads == 0 ? 1 : opts.threads;
    if (threads <= 1 || count < 8) {
        work(opts.d_min, opts.d_max);
    } else {
        threads = std::min<unsigned>(threads, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        std::uint64_t chunk = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = opts.d_min + t * chunk;
            if (lo > opts.d_max) break;
            std::uint64_t hi = std::min(opts.d_max, lo + chunk - 1);
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& row : out.rows)
        if (!row.error.empty()) out.resource_exceeded = true;
    return out;
}

std::string render_table(const TableResult& table, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "d,A,i,method,saturated\n";
        for (const auto& r : table.rows) {
            os << r.d << ',' << r.a << ',';
            if (r.has_i) os << r.i;
            os << ',' << r.method << ',' << (r.saturated ? 1 : 0) << '\n';
        }
        return os.str();
    }
    if (format == "md") {
        os << "| d | A(d) | i(d) | method | saturated |\n|---|---|---|---|---|\n";
        for (const auto& r : table.rows) {
            os << "| " << r.d << " | " << r.a << " | ";
            if (r.has_i) os << r.i;
            else os << "-";
            os << " | " << r.method << " | " << (r.saturated ? "yes" : "no") << " |\n";
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : table.rows) {
            nlohmann::json e{{"d", r.d}, {"A", r.a}, {"method", r.method},
                             {"saturated", r.saturated}};
            if (r.has_i) e["i"] = r.i;
            if (!r.error.empty()) e["error"] = r.error;
            j.push_back(e);
        }
        return j.dump(2) + "\n";
    }
    throw InvalidArgument("unknown table format: " + format);
}

std::string render_orbit_csv(std::uint64_t i, std::uint64_t d, std::uint64_t count) {
    auto pts = golden::orbit_points(mpz_class(static_cast<unsigned long>(i)),
                                    mpz_class(static_cast<unsigned long>(d)), count);
    std::ostringstream os;
    os << "n,index,point_float,point_a,point_b,interval\n";
    char buf[40];
    for (std::size_t n = 0; n < pts.size(); ++n) {
        const auto& p = pts[n];
        std::snprintf(buf, sizeof buf, "%.9f", p.point.to_double());
        os << n << ',' << p.index.get_str() << ',' << buf << ',' << p.point.num_a().get_str()
           << ',' << p.point.num_b().get_str() << ",I" << p.interval_tag << '\n';
    }
    return os.str();
}

std::string render_levelset(long k, std::uint64_t d_max, const std::string& format) {
    auto ls = fibanalysis::level_set(k);
    std::vector<std::uint64_t> members;
    for (std::uint64_t d = 1; d <= d_max; ++d)
        if (fibanalysis::longest_map(mpz_class(static_cast<unsigned long>(d))) == k)
            members.push_back(d);

    if (format == "json") {
        nlohmann::json j;
        j["k"] = k;
        j["intervals"] = nlohmann::json::array();
        for (const auto& iv : ls.intervals)
            j["intervals"].push_back({{"lo", iv.lo.to_string()},
                                      {"hi", iv.hi.to_string()},
                                      {"lo_open", iv.lo_open},
                                      {"hi_open", iv.hi_open},
                                      {"lo_float", iv.lo.to_double()},
                                      {"hi_float", iv.hi.to_double()}});
        j["d"] = members;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "k,d\n";
        for (auto d : members) os << k << ',' << d << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "level set of A(d) = " << k << ":\n";
    for (const auto& iv : ls.intervals) {
        char lo[40], hi[40];
        std::snprintf(lo, sizeof lo, "%.9f", iv.lo.to_double());
        std::snprintf(hi, sizeof hi, "%.9f", iv.hi.to_double());
        os << "  g(d) in " << (iv.lo_open ? '(' : '[') << iv.lo.to_string() << ", "
           << iv.hi.to_string() << (iv.hi_open ? ')' : ']') << "  ~ " << (iv.lo_open ? '(' : '[')
           << lo << ", " << hi << (iv.hi_open ? ')' : ']') << "\n";
    }
    os << "d <= " << d_max << " with A(d) = " << k << ":";
    if (members.empty()) os << " none";
    for (auto d : members) os << ' ' << d;
    os << "\n";
    return os.str();
}

std::string render_density(long k_min, long k_max, std::uint64_t empirical_dmax,
                           const std::string& format) {
    if (k_min < 2 || k_min > k_max) throw InvalidArgument("density: need 2 <= k_min <= k_max");
    struct Row {
        long k;
        double closed;
        double empirical;
    };
    std::vector<Row> rows;
    for (long k = k_min; k <= k_max; ++k) {
        Row r{k, fibanalysis::density(k), -1.0};
        if (empirical_dmax > 0) r.empirical = fibanalysis::empirical_density(k, empirical_dmax);
        rows.push_back(r);
    }
    char buf[40];
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json e{{"k", r.k}, {"density", r.closed}};
            if (r.empirical >= 0) e["empirical"] = r.empirical;
            j.push_back(e);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "k,density" << (empirical_dmax > 0 ? ",empirical" : "") << "\n";
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%.9f", r.closed);
            os << r.k << ',' << buf;
            if (r.empirical >= 0) {
                std::snprintf(buf, sizeof buf, "%.9f", r.empirical);
                os << ',' << buf;
            }
            os << '\n';
        }
        return os.str();
    }
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.closed);
        os << "dens(" << r.k << ") = " << buf;
        if (r.empirical >= 0) {
            std::snprintf(buf, sizeof buf, "%.6f", r.empirical);
            os << "  (empirical over d <= " << empirical_dmax << ": " << buf << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace fibmap::tables
