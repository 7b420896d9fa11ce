#include "core/numeration.hpp"

#include <algorithm>
#include <limits>

#include "core/errors.hpp"

namespace fibmap::numeration {

const std::vector<std::uint64_t>& fibonacci_u64() {
    static const std::vector<std::uint64_t> fibs = [] {
        std::vector<std::uint64_t> f = {0, 1};
        // F_93 = 12200160415121876738 still fits; F_94 does not.
        while (f.size() < 94) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
        return f;
    }();
    return fibs;
}

ZeckWord zeck_encode(std::uint64_t n) {
    ZeckWord w;
    if (n == 0) return w;
    const auto& F = fibonacci_u64();
    std::size_t top = 2;
    while (top + 1 < F.size() && F[top + 1] <= n) ++top;
    for (std::size_t j = top; j >= 2; --j) {
        if (F[j] <= n) {
            w.digits.push_back(1);
            n -= F[j];
        } else {
            w.digits.push_back(0);
        }
    }
    return w;
}

void validate(const ZeckWord& w) {
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
        if (w.digits[i] > 1) throw InvalidZeckendorf("zeckendorf digit out of {0,1}");
        if (i + 1 < w.digits.size() && w.digits[i] == 1 && w.digits[i + 1] == 1)
            throw InvalidZeckendorf("adjacent ones in zeckendorf word");
    }
    if (!w.digits.empty() && w.digits.front() == 0)
        throw InvalidZeckendorf("leading zero in zeckendorf word");
}

std::uint64_t zeck_decode(const ZeckWord& w) {
    validate(w);
    const auto& F = fibonacci_u64();
    if (w.digits.size() > F.size() - 2)
        throw InvalidArgument("zeck_decode: word too long for 64-bit result");
    std::uint64_t n = 0;
    std::size_t weight = w.digits.size() + 1;  // msd has weight F_{len+1}
    for (std::size_t i = 0; i < w.digits.size(); ++i, --weight) {
        if (!w.digits[i]) continue;
        if (n > std::numeric_limits<std::uint64_t>::max() - F[weight])
            throw InvalidArgument("zeck_decode: overflow");
        n += F[weight];
    }
    return n;
}

BaseKWord base_encode(std::uint64_t n, unsigned base) {
    if (base < 2) throw InvalidArgument("base_encode: base must be >= 2");
    BaseKWord w;
    w.base = base;
    if (n == 0) {
        w.digits.push_back(0);
        return w;
    }
    while (n > 0) {
        w.digits.push_back(static_cast<std::uint8_t>(n % base));
        n /= base;
    }
    std::reverse(w.digits.begin(), w.digits.end());
    return w;
}

std::uint64_t base_decode(const BaseKWord& w) {
    if (w.base < 2) throw InvalidArgument("base_decode: base must be >= 2");
    std::uint64_t n = 0;
    for (std::uint8_t d : w.digits) {
        if (d >= w.base) throw DigitOutOfRange("base_decode: digit >= base");
        if (n > (std::numeric_limits<std::uint64_t>::max() - d) / w.base)
            throw InvalidArgument("base_decode: overflow");
        n = n * w.base + d;
    }
    return n;
}

std::string digits_to_string(const DigitWord& w) {
    std::string s;
    s.reserve(w.size());
    for (std::uint8_t d : w) {
        if (d < 10)
            s.push_back(static_cast<char>('0' + d));
        else
            s.push_back(static_cast<char>('a' + d - 10));
    }
    return s;
}

DigitWord digits_from_string(const std::string& s, unsigned base) {
    DigitWord w;
    w.reserve(s.size());
    for (char c : s) {
        unsigned d;
        if (c >= '0' && c <= '9')
            d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'z')
            d = static_cast<unsigned>(c - 'a') + 10;
        else
            throw DigitOutOfRange(std::string("unrecognized digit character '") + c + "'");
        if (d >= base) throw DigitOutOfRange("digit out of range for base");
        w.push_back(static_cast<std::uint8_t>(d));
    }
    return w;
}

}  // namespace fibmap::numeration
