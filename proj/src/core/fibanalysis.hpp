#ifndef FIBMAP_CORE_FIBANALYSIS_HPP
#define FIBMAP_CORE_FIBANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/golden.hpp"
#include "core/words.hpp"

namespace fibmap::fibanalysis {

// Result record for one difference d.
struct MapStat {
    std::uint64_t d = 0;
    std::uint64_t a = 0;                  // longest progression length A(d)
    std::optional<std::uint64_t> i;       // first position, when computed
    enum class Method { closed_form, brute_force } method = Method::closed_form;
    bool saturated = false;               // only meaningful for brute force
};

// A(d) for the Fibonacci word, exactly:
//   d = 1                  -> 2 (boundary case: g(1) = tau^-2 exactly)
//   g(d) <  tau^-2         -> ceil(tau^-1 / g(d))
//   tau^-2 < g(d) < 1/2    -> 2 * ceil((tau^-1 - g(d)) / g(2d))
// The quotients are provably never integers; a tie raises InternalError.
mpz_class longest_map(const mpz_class& d);
std::uint64_t longest_map_u64(std::uint64_t d);

// Least j carrying a progression of length A(d); scans only positions
// with letter 0 (the first maximal progression always sits on 0s, since
// the 1s are isolated). Throws ScanCapExceeded past scan_cap.
std::uint64_t first_position(std::uint64_t d, std::uint64_t scan_cap = 10'000'000,
                             words::SymbolStream* fib = nullptr);

// A(F_n) = ceil(tau^(n-1)) for n >= 2, via the integer identity
// ceil(tau^(n-1)) = F_n + F_{n-2} + (n even). The identity is checked
// once against the exact ZTau ceiling for n <= 87.
mpz_class a_fib_index(long n);

// A(k F_n) = ceil(tau^(n-1) / k), valid when k <= tau^(n-2) (checked
// exactly; PreconditionViolated otherwise).
mpz_class a_multiple_fib(const mpz_class& k, long n);

// A(F_n / 2) = ceil(tau^(n-3)) + 1 + (n/3 mod 2); needs 3 | n, n >= 6.
mpz_class a_half_fib(long n);

// Exact ceil(tau^m) for m >= 1.
mpz_class ceil_tau_pow(long m);

// Step-distance level set of A(d) = k:
//   k = 2       : (tau^-1/2, tau^-2]
//   k odd  >= 3 : (tau^-1/k, tau^-1/(k-1))
//   k even >= 4 : (tau^-1/k, tau^-1/(k-1)) u ((k-2tau)/(2k-6), (k-2tau^-1)/(2k-2))
struct LevelSet {
    long k = 0;
    std::vector<golden::Interval> intervals;

    bool contains(const golden::ZTau& g) const;
};
LevelSet level_set(long k);

// Closed-form density of {d : A(d) = k} (float for display; the interval
// lengths are exact until the final division).
double density(long k);

// #{d <= d_max : A(d) = k} / d_max.
double empirical_density(long k, std::uint64_t d_max);

// Minimal period of (F_i mod k), by cycle detection on consecutive pairs.
std::uint64_t pisano_period(std::uint64_t k);

// Least n >= 1 with k | F_n.
std::uint64_t rank_of_apparition(std::uint64_t k);

// (n, A(F_{n*alpha(k)} / k)) for n = 1..n_max.
std::vector<std::pair<long, mpz_class>> a_fib_over_k(long k, long n_max);

// For A(d) = 2: the first position is 0 when stepping right, 2 when
// stepping left. PreconditionViolated if A(d) != 2.
int classify_ad2_position(const mpz_class& d);

// Closed-form (A, i) for the families d = F_n - 1, F_n + 1, F_n + 2.
enum class FibFamily { fib_minus_1, fib_plus_1, fib_plus_2 };
struct FamilyValue {
    mpz_class a;
    mpz_class i;
};
FamilyValue family_ad_id(FibFamily family, long n);

}  // namespace fibmap::fibanalysis

#endif
