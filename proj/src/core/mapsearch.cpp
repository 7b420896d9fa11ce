#include "core/mapsearch.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace fibmap::mapsearch {

bool has_map(words::SymbolStream& seq, std::uint64_t d, std::uint64_t i, std::uint64_t len) {
    if (d < 1 || len < 1) throw InvalidArgument("has_map: d and len must be >= 1");
    char c = seq.term(i);
    for (std::uint64_t k = 1; k < len; ++k)
        if (seq.term(i + k * d) != c) return false;
    return true;
}

SearchResult longest_in_window(words::SymbolStream& seq, std::uint64_t d, std::uint64_t window) {
    if (d < 1) throw InvalidArgument("longest_in_window: d must be >= 1");
    if (window <= d) throw InvalidArgument("longest_in_window: window must exceed d");

    std::string_view w = seq.prefix(static_cast<std::size_t>(window));
    SearchResult res{d, window, 1, 0, false};

    // Walk each residue class r, r+d, r+2d, ... once, splitting it into
    // maximal equal-letter streaks; a streak of length L supplies starts
    // for progressions up to length L.
    for (std::uint64_t r = 0; r < d; ++r) {
        std::uint64_t k = r;
        while (k < window) {
            std::uint64_t j = k;
            while (j + d < window && w[j + d] == w[j]) j += d;
            std::uint64_t len = (j - k) / d + 1;
            bool truncated = j + d >= window;
            if (len > res.best_len) {
                res.best_len = len;
                res.first_pos = k;
                res.saturated = truncated;
            } else if (len == res.best_len) {
                res.first_pos = std::min(res.first_pos, k);
                if (truncated) res.saturated = true;
            }
            k = j + d;
        }
    }
    return res;
}

std::uint64_t first_occurrence(words::SymbolStream& seq, std::uint64_t d, std::uint64_t len,
                               std::uint64_t cap) {
    if (d < 1 || len < 1 || cap < 1) throw InvalidArgument("first_occurrence: bad arguments");
    for (std::uint64_t j = 0; j <= cap; ++j)
        if (has_map(seq, d, j, len)) return j;
    throw ScanCapExceeded("first_occurrence: no length-" + std::to_string(len) +
                          " progression with difference " + std::to_string(d) +
                          " starts at or before " + std::to_string(cap));
}

std::uint64_t default_window(std::uint64_t d) {
    return std::max<std::uint64_t>(1'000'000, 64 * d);
}

}  // namespace fibmap::mapsearch
