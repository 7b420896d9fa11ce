#ifndef FIBMAP_CORE_SUITES_HPP
#define FIBMAP_CORE_SUITES_HPP

#include <cstdint>

#include "core/fibanalysis.hpp"
#include "core/report.hpp"

namespace fibmap::suites {

// Default bounds are the ones the acceptance checks use; the CLI can
// shrink them for quick runs.
struct FibBounds {
    std::uint64_t levelset_dmax = 100'000;
    std::uint64_t density_dmax = 1'000'000;
    std::uint64_t families_dmax = 10'000;
    std::uint64_t equivalence_terms = 1'000'000;
    long formula_nmax = 30;
    long identity_nmax = 87;
    std::uint64_t scan_cap = 10'000'000;
};

struct TmBounds {
    std::uint64_t window = 1u << 20;
    std::uint64_t odd_dmax = 4095;
    int pow2_nmax = 12;
    int doubling_nmax = 6;
    std::uint64_t equivalence_terms = 1'000'000;
    std::uint64_t witness_cap = 1u << 17;
};

struct RsBounds {
    std::uint64_t window = 1u << 20;
    int pow2_nmax = 10;
};

struct ConjBounds {
    std::uint64_t scan_cap = 10'000'000;
    std::uint64_t slope_dmax = 1'000'000;
    std::uint64_t tm_window = 1u << 21;
};

// Fibonacci word checks.
report::Check check_fib_formula_vs_index(long nmax);
report::Check check_ceil_identity(long nmax);
report::Check check_levelset_equivalence(std::uint64_t dmax);
report::Check check_parity_law(std::uint64_t dmax);
report::Check check_density(long k, std::uint64_t dmax, double expected, double tol);
report::Check check_gd_equidistribution(std::uint64_t dmax, double tol);
report::Check check_fib_triple_equivalence(std::uint64_t terms);
report::Check check_family(fibanalysis::FibFamily family, std::uint64_t dmax,
                           std::uint64_t scan_cap);
report::Check check_ad2_positions(std::uint64_t dmax, std::uint64_t scan_cap);
report::Check check_i0_implies_a2(std::uint64_t dmax);
report::Check check_fn_plus2_a3i3(long n_lo, long n_hi, std::uint64_t scan_cap);
report::Check check_fib_over_k_list(long index_max);
report::Check check_half_fib(long nmax);
report::Check check_multiple_fib(std::uint64_t dmax);
report::Check check_new_maxima(std::uint64_t dmax);
report::Check check_scan_letter0(std::uint64_t dmax, std::uint64_t scan_cap);

// Thue-Morse checks.
report::Check check_tm_equivalence(std::uint64_t terms);
report::Check check_tm_pow2(const TmBounds& b);
report::Check check_tm_odd_geq4(const TmBounds& b);
report::Check check_tm_a11(const TmBounds& b);
report::Check check_tm_omax4(const TmBounds& b);
report::Check check_tm_omax5(const TmBounds& b);
report::Check check_tm_i_doubling(const TmBounds& b);

// Rudin-Shapiro checks.
report::Check check_rs_pow2(const RsBounds& b);

// Conjecture spot-checks (never fail a core run).
report::Check check_conj_tm_first_positions(const ConjBounds& b);
report::Check check_conj_fib_first_positions(const ConjBounds& b);
report::Check check_conj_slope_bound(const ConjBounds& b);

report::SuiteReport run_suite_fib(const FibBounds& b = {});
report::SuiteReport run_suite_tm(const TmBounds& b = {});
report::SuiteReport run_suite_rs(const RsBounds& b = {});
report::SuiteReport run_suite_conjectures(const ConjBounds& b = {});

// Closed form vs window-bounded search for 1 <= d <= d_max. The window
// is a minimum; it is extended per d so that it covers the first maximal
// progression (and doubled while the search comes back saturated).
report::SuiteReport run_verify(std::uint64_t d_max, std::uint64_t window, unsigned threads);

}  // namespace fibmap::suites

#endif
