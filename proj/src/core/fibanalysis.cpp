#include "core/fibanalysis.hpp"

#include <mutex>

#include "core/errors.hpp"

namespace fibmap::fibanalysis {

using golden::ZTau;
using golden::fibonacci;

namespace {

// ceil(num/den) in Q(tau), with the no-tie guarantee enforced.
mpz_class ceil_quotient(const ZTau& num, const ZTau& den) {
    ZTau q = num / den;
    if (q.is_integer())
        throw InternalError("longest_map: quotient unexpectedly an integer");
    return q.floor() + 1;
}

const ZTau& tau_inv() {
    static const ZTau v = ZTau::tau_pow(-1);
    return v;
}

const ZTau& tau_inv2() {
    static const ZTau v = ZTau::tau_pow(-2);
    return v;
}

}  // namespace

mpz_class longest_map(const mpz_class& d) {
    if (d < 1) throw InvalidArgument("longest_map: d must be >= 1");
    // g(1) = tau^-2 sits exactly on the boundary both formulas exclude.
    if (d == 1) return 2;
    ZTau g = golden::step_distance(d);
    if (g < tau_inv2()) return ceil_quotient(tau_inv(), g);
    return 2 * ceil_quotient(tau_inv() - g, golden::step_distance(2 * d));
}

std::uint64_t longest_map_u64(std::uint64_t d) {
    mpz_class a = longest_map(mpz_class(static_cast<unsigned long>(d)));
    if (!a.fits_ulong_p()) throw InternalError("longest_map_u64: result exceeds 64 bits");
    return a.get_ui();
}

std::uint64_t first_position(std::uint64_t d, std::uint64_t scan_cap,
                             words::SymbolStream* fib) {
    if (d < 1 || scan_cap < 1) throw InvalidArgument("first_position: bad arguments");
    std::unique_ptr<words::SymbolStream> own;
    if (!fib) {
        own = words::make_stream("fib");
        fib = own.get();
    }
    const std::uint64_t a = longest_map_u64(d);
    for (std::uint64_t j = 0; j <= scan_cap; ++j) {
        if (fib->term(j) != '0') continue;
        bool ok = true;
        for (std::uint64_t k = 1; k < a; ++k)
            if (fib->term(j + k * d) != '0') {
                ok = false;
                break;
            }
        if (ok) return j;
    }
    throw ScanCapExceeded("first_position: i(" + std::to_string(d) + ") exceeds scan cap " +
                          std::to_string(scan_cap));
}

mpz_class ceil_tau_pow(long m) {
    if (m < 1) throw InvalidArgument("ceil_tau_pow: exponent must be >= 1");
    mpz_class c = ZTau::tau_pow(m).ceil();
    return c;
}

mpz_class a_fib_index(long n) {
    if (n < 2) throw PreconditionViolated("a_fib_index: n must be >= 2");
    // ceil(tau^(n-1)) = F_n + F_{n-2} + (n even), since
    // tau^(n-1) = F_n + F_{n-2} + (-1)^n tau^-(n-1).
    static std::once_flag verified;
    std::call_once(verified, [] {
        for (long m = 2; m <= 87; ++m) {
            mpz_class lhs = ceil_tau_pow(m - 1);
            mpz_class rhs = fibonacci(m) + fibonacci(m - 2) + (m % 2 == 0 ? 1 : 0);
            if (lhs != rhs) throw InternalError("a_fib_index: identity check failed");
        }
    });
    return fibonacci(n) + fibonacci(n - 2) + (n % 2 == 0 ? 1 : 0);
}

mpz_class a_multiple_fib(const mpz_class& k, long n) {
    if (k < 1) throw PreconditionViolated("a_multiple_fib: k must be >= 1");
    if (n < 2) throw PreconditionViolated("a_multiple_fib: n must be >= 2");
    // need k <= tau^(n-2); tau powers are irrational, so < is equivalent
    if ((ZTau(k) - ZTau::tau_pow(n - 2)).sign() > 0)
        throw PreconditionViolated("a_multiple_fib: k exceeds tau^(n-2)");
    return ceil_quotient(ZTau::tau_pow(n - 1), ZTau(k));
}

mpz_class a_half_fib(long n) {
    if (n < 6 || n % 3 != 0)
        throw PreconditionViolated("a_half_fib: need n >= 6 with 3 | n");
    return ceil_tau_pow(n - 3) + 1 + (n / 3) % 2;
}

bool LevelSet::contains(const ZTau& g) const {
    for (const auto& iv : intervals)
        if (iv.contains(g)) return true;
    return false;
}

LevelSet level_set(long k) {
    if (k < 2) throw PreconditionViolated("level_set: k must be >= 2");
    LevelSet ls;
    ls.k = k;
    if (k == 2) {
        ls.intervals.push_back({ZTau(-1, 1, 2), ZTau::tau_pow(-2), true, false});
        return ls;
    }
    // tau^-1 / k = (tau - 1) / k
    ls.intervals.push_back({ZTau(-1, 1, k), ZTau(-1, 1, k - 1), true, true});
    if (k % 2 == 0) {
        // (k - 2 tau)/(2k - 6)  and  (k - 2 tau^-1)/(2k - 2) = (k + 2 - 2 tau)/(2k - 2)
        ls.intervals.push_back(
            {ZTau(k, -2, 2 * k - 6), ZTau(k + 2, -2, 2 * k - 2), true, true});
    }
    return ls;
}

double density(long k) {
    if (k < 2) throw PreconditionViolated("density: k must be >= 2");
    ZTau len(0);
    for (const auto& iv : level_set(k).intervals) len = len + (iv.hi - iv.lo);
    // fraction of the codomain [0, 1/2] of g
    return (ZTau(2) * len).to_double();
}

double empirical_density(long k, std::uint64_t d_max) {
    if (d_max < 1) throw InvalidArgument("empirical_density: d_max must be >= 1");
    if (k < 2) return 0.0;  // A(d) = 2 is the uniform minimum
    std::uint64_t count = 0;
    mpz_class kz(k);
    for (std::uint64_t d = 1; d <= d_max; ++d)
        if (longest_map(mpz_class(static_cast<unsigned long>(d))) == kz) ++count;
    return static_cast<double>(count) / static_cast<double>(d_max);
}

std::uint64_t pisano_period(std::uint64_t k) {
    if (k < 1) throw InvalidArgument("pisano_period: k must be >= 1");
    if (k == 1) return 1;
    std::uint64_t a = 0, b = 1, n = 0;
    do {
        std::uint64_t c = (a + b) % k;
        a = b;
        b = c;
        ++n;
    } while (!(a == 0 && b == 1));
    return n;
}

std::uint64_t rank_of_apparition(std::uint64_t k) {
    if (k < 1) throw InvalidArgument("rank_of_apparition: k must be >= 1");
    if (k == 1) return 1;
    std::uint64_t a = 0, b = 1, n = 0;
    do {
        std::uint64_t c = (a + b) % k;
        a = b;
        b = c;
        ++n;
    } while (a != 0);
    return n;
}

std::vector<std::pair<long, mpz_class>> a_fib_over_k(long k, long n_max) {
    if (k < 2) throw PreconditionViolated("a_fib_over_k: k must be >= 2");
    if (n_max < 1) throw InvalidArgument("a_fib_over_k: n_max must be >= 1");
    const long alpha = static_cast<long>(rank_of_apparition(static_cast<std::uint64_t>(k)));
    std::vector<std::pair<long, mpz_class>> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        mpz_class f = fibonacci(n * alpha);
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t(), mpz_class(k).get_mpz_t());
        if (r != 0) throw InternalError("a_fib_over_k: k does not divide F_{n*alpha(k)}");
        out.emplace_back(n, longest_map(q));
    }
    return out;
}

int classify_ad2_position(const mpz_class& d) {
    if (longest_map(d) != 2)
        throw PreconditionViolated("classify_ad2_position: A(d) != 2");
    return golden::step_direction(d) == golden::StepDirection::right ? 0 : 2;
}

FamilyValue family_ad_id(FibFamily family, long n) {
    switch (family) {
        case FibFamily::fib_minus_1: {
            if (n < 3) throw PreconditionViolated("family d = F_n - 1 needs n >= 3");
            if (n == 3) return {2, 2};
            if (n == 4) return {3, 3};
            if (n == 5) return {6, 16};
            if (n % 2 == 0) return {2, 0};
            return {4, fibonacci(n - 1)};
        }
        case FibFamily::fib_plus_1: {
            if (n < 0) throw PreconditionViolated("family d = F_n + 1 needs n >= 0");
            if (n == 0) return {2, 2};
            if (n == 1 || n == 2) return {3, 3};
            if (n == 3) return {5, 20};
            if (n == 4) return {6, 16};
            if (n == 5) return {3, 20};
            if (n % 2 == 0) return {4, fibonacci(n - 1) - 3};
            return {2, 2};
        }
        case FibFamily::fib_plus_2: {
            if (n < 0) throw PreconditionViolated("family d = F_n + 2 needs n >= 0");
            if (n == 0) return {3, 3};
            if (n == 1 || n == 2) return {5, 20};
            if (n == 3) return {6, 16};
            if (n == 4) return {7, 11};
            if (n == 5) return {2, 0};
            if (n == 6) return {4, 11};
            if (n == 7) return {3, 11};
            return {3, 3};
        }
    }
    throw InvalidArgument("family_ad_id: unknown family");
}

}  // namespace fibmap::fibanalysis
