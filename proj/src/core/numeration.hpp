#ifndef FIBMAP_CORE_NUMERATION_HPP
#define FIBMAP_CORE_NUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fibmap::numeration {

// Digit words are msd-first vectors of small digits.
using DigitWord = std::vector<std::uint8_t>;

// Zeckendorf representation: sum of non-consecutive Fibonacci numbers
// with digit weights F_2, F_3, ... from the least significant end.
// Zero is the empty word; otherwise the leading digit is 1 and no two
// adjacent digits are both 1.
struct ZeckWord {
    DigitWord digits;
};

struct BaseKWord {
    unsigned base = 2;
    DigitWord digits;  // canonical zero is the single digit 0
};

// Greedy expansion over F_2, F_3, ...
ZeckWord zeck_encode(std::uint64_t n);

// Inverse of zeck_encode; validates the invariants first.
std::uint64_t zeck_decode(const ZeckWord& w);

// Throws InvalidZeckendorf on adjacent ones or a leading zero.
void validate(const ZeckWord& w);

BaseKWord base_encode(std::uint64_t n, unsigned base);
std::uint64_t base_decode(const BaseKWord& w);

// Fibonacci numbers that fit in 64 bits (F_0 .. F_93), for the greedy
// encoder and digit weights.
const std::vector<std::uint64_t>& fibonacci_u64();

std::string digits_to_string(const DigitWord& w);
DigitWord digits_from_string(const std::string& s, unsigned base);

}  // namespace fibmap::numeration

#endif
