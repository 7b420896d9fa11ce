#ifndef FIBMAP_CORE_MAPSEARCH_HPP
#define FIBMAP_CORE_MAPSEARCH_HPP

#include <cstdint>

#include "core/words.hpp"

namespace fibmap::mapsearch {

// Window-bounded search outcome. best_len is always a certified lower
// bound for A(d); it is exact only under external certification (the
// Fibonacci closed form, or a published value being re-verified).
// saturated means some best-length progression's next index would fall
// outside the window, so a longer one might extend past it.
struct SearchResult {
    std::uint64_t d = 0;
    std::uint64_t window = 0;
    std::uint64_t best_len = 0;
    std::uint64_t first_pos = 0;  // earliest start of a best_len progression
    bool saturated = false;
};

// All of x_i, x_{i+d}, ..., x_{i+(len-1)d} equal?
bool has_map(words::SymbolStream& seq, std::uint64_t d, std::uint64_t i, std::uint64_t len);

// Longest monochromatic progression with all indices < window.
SearchResult longest_in_window(words::SymbolStream& seq, std::uint64_t d, std::uint64_t window);

// Least start j <= cap of a length-len progression; throws ScanCapExceeded.
std::uint64_t first_occurrence(words::SymbolStream& seq, std::uint64_t d, std::uint64_t len,
                               std::uint64_t cap);

// max(10^6, 64 d): small windows must never truncate short progressions.
std::uint64_t default_window(std::uint64_t d);

}  // namespace fibmap::mapsearch

#endif
