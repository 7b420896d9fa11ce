#include "core/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "core/errors.hpp"
#include "core/mapsearch.hpp"

namespace fibmap::suites {

using fibanalysis::longest_map;
using fibanalysis::longest_map_u64;
using golden::ZTau;
using golden::fibonacci;
using report::Check;
using report::CheckKind;
using report::SuiteReport;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Check make_check(std::string id, std::string claim, bool pass, std::string observed,
                 std::string expected, CheckKind kind = CheckKind::certified) {
    return Check{std::move(id), std::move(claim), std::move(observed), std::move(expected),
                 pass, kind};
}

}  // namespace

Check check_fib_formula_vs_index(long nmax) {
    std::string firstbad;
    for (long n = 2; n <= nmax; ++n) {
        mpz_class lhs = longest_map(fibonacci(n));
        mpz_class rhs = fibanalysis::a_fib_index(n);
        if (lhs != rhs) {
            firstbad = "n=" + std::to_string(n) + ": A(F_n)=" + lhs.get_str() +
                       " vs ceil(tau^(n-1))=" + rhs.get_str();
            break;
        }
    }
    return make_check("fib.a_at_fibonacci",
                      "A(F_n) = ceil(tau^(n-1)) for 2 <= n <= " + std::to_string(nmax),
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal");
}

Check check_ceil_identity(long nmax) {
    std::string firstbad;
    for (long n = 2; n <= nmax; ++n) {
        mpz_class exact = fibanalysis::ceil_tau_pow(n - 1);
        mpz_class ident = fibonacci(n) + fibonacci(n - 2) + (n % 2 == 0 ? 1 : 0);
        if (exact != ident) {
            firstbad = "n=" + std::to_string(n);
            break;
        }
    }
    return make_check("fib.ceil_tau_identity",
                      "exact ceil(tau^(n-1)) equals F_n + F_(n-2) + [n even] for 2 <= n <= " +
                          std::to_string(nmax),
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal");
}

Check check_levelset_equivalence(std::uint64_t dmax) {
    std::string firstbad;
    std::uint64_t checked = 0;
    std::map<long, fibanalysis::LevelSet> cache;
    auto set_for = [&cache](long k) -> const fibanalysis::LevelSet& {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, fibanalysis::level_set(k)).first;
        return it->second;
    };
    for (std::uint64_t d = 2; d <= dmax && firstbad.empty(); ++d) {
        mpz_class dz(static_cast<unsigned long>(d));
        ZTau g = golden::step_distance(dz);
        mpz_class az = longest_map(dz);
        long k = az.get_si();
        if (!set_for(k).contains(g))
            firstbad = "d=" + std::to_string(d) + ": g(d) outside level set of A(d)=" +
                       std::to_string(k);
        else if (set_for(k + 1).contains(g))
            firstbad = "d=" + std::to_string(d) + ": g(d) also in level set " +
                       std::to_string(k + 1);
        else if (k > 2 && set_for(k - 1).contains(g))
            firstbad = "d=" + std::to_string(d) + ": g(d) also in level set " +
                       std::to_string(k - 1);
        ++checked;
    }
    return make_check("fib.levelset_equivalence",
                      "A(d)=k iff g(d) lies in the k-th step-distance level set, 2 <= d <= " +
                          std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(checked) + " exact memberships"
                                       : firstbad,
                      "exact membership, no overlap");
}

Check check_parity_law(std::uint64_t dmax) {
    std::string firstbad;
    const ZTau& t2 = ZTau::tau_pow(-2);
    ZTau half(1, 0, 2);
    std::uint64_t hits = 0;
    for (std::uint64_t d = 2; d <= dmax && firstbad.empty(); ++d) {
        mpz_class dz(static_cast<unsigned long>(d));
        ZTau g = golden::step_distance(dz);
        if (g > t2 && g < half) {
            mpz_class a = longest_map(dz);
            if (a < 4 || a % 2 != 0) firstbad = "d=" + std::to_string(d) + ": A=" + a.get_str();
            ++hits;
        }
    }
    return make_check("fib.parity_law",
                      "g(d) > tau^-2 implies A(d) even and >= 4, d <= " + std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(hits) + " cases, all even >= 4" : firstbad,
                      "all even >= 4");
}

Check check_density(long k, std::uint64_t dmax, double expected, double tol) {
    double emp = fibanalysis::empirical_density(k, dmax);
    bool pass = std::fabs(emp - expected) < tol;
    return make_check("fib.density_k" + std::to_string(k),
                      "empirical density of {d : A(d)=" + std::to_string(k) + "} over d <= " +
                          std::to_string(dmax) + " within " + fmt(tol) + " of " + fmt(expected),
                      pass, fmt(emp) + " (closed form " + fmt(fibanalysis::density(k)) + ")",
                      fmt(expected) + " +/- " + fmt(tol));
}

Check check_gd_equidistribution(std::uint64_t dmax, double tol) {
    // float statistics over the exact values; the CDF of g should be 2x
    const double checkpoints[] = {0.1, 0.2, 0.3, 0.4};
    std::uint64_t counts[4] = {0, 0, 0, 0};
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        double g = golden::step_distance(mpz_class(static_cast<unsigned long>(d))).to_double();
        for (int t = 0; t < 4; ++t)
            if (g <= checkpoints[t]) ++counts[t];
    }
    double worst = 0;
    for (int t = 0; t < 4; ++t) {
        double dev = std::fabs(static_cast<double>(counts[t]) / static_cast<double>(dmax) -
                               2 * checkpoints[t]);
        worst = std::max(worst, dev);
    }
    return make_check("fib.gd_equidistribution",
                      "empirical CDF of g(d) at x in {0.1,0.2,0.3,0.4} within " + fmt(tol) +
                          " of 2x, d <= " + std::to_string(dmax),
                      worst < tol, "max deviation " + fmt(worst), "< " + fmt(tol));
}

Check check_fib_triple_equivalence(std::uint64_t terms) {
    auto sub = words::make_stream("fib");
    words::DfaoStream dfao(automata::builtin("fib"));
    words::RotationStream rot;
    std::string_view a = sub->prefix(terms);
    std::string_view b = dfao.prefix(terms);
    std::string_view c = rot.prefix(terms);
    std::string firstbad;
    for (std::uint64_t n = 0; n < terms; ++n)
        if (a[n] != b[n] || a[n] != c[n]) {
            firstbad = "n=" + std::to_string(n) + ": substitution " + a[n] + ", zeckendorf " +
                       b[n] + ", rotation " + c[n];
            break;
        }
    return make_check("fib.generator_triple_equivalence",
                      "substitution, Zeckendorf-automaton and rotation generators agree on " +
                          std::to_string(terms) + " terms",
                      firstbad.empty(), firstbad.empty() ? "identical" : firstbad, "identical");
}

namespace {

const char* family_name(fibanalysis::FibFamily f) {
    switch (f) {
        case fibanalysis::FibFamily::fib_minus_1: return "F_n-1";
        case fibanalysis::FibFamily::fib_plus_1: return "F_n+1";
        case fibanalysis::FibFamily::fib_plus_2: return "F_n+2";
    }
    return "?";
}

}  // namespace

Check check_family(fibanalysis::FibFamily family, std::uint64_t dmax, std::uint64_t scan_cap) {
    long n0 = family == fibanalysis::FibFamily::fib_minus_1 ? 3 : 0;
    long offset = family == fibanalysis::FibFamily::fib_minus_1 ? -1
                  : family == fibanalysis::FibFamily::fib_plus_1 ? 1 : 2;
    auto fib_stream = words::make_stream("fib");
    std::string firstbad;
    long cases = 0;
    for (long n = n0;; ++n) {
        mpz_class dz = fibonacci(n) + offset;
        if (dz < 1) continue;
        if (dz > static_cast<unsigned long>(dmax)) break;
        auto want = fibanalysis::family_ad_id(family, n);
        mpz_class a = longest_map(dz);
        std::uint64_t i = fibanalysis::first_position(dz.get_ui(), scan_cap, fib_stream.get());
        if (a != want.a || mpz_class(static_cast<unsigned long>(i)) != want.i) {
            firstbad = "n=" + std::to_string(n) + " (d=" + dz.get_str() + "): computed A=" +
                       a.get_str() + ", i=" + std::to_string(i) + "; case values A=" +
                       want.a.get_str() + ", i=" + want.i.get_str();
            break;
        }
        ++cases;
    }
    std::string id = std::string("fib.family_") +
                     (family == fibanalysis::FibFamily::fib_minus_1   ? "fn_minus_1"
                      : family == fibanalysis::FibFamily::fib_plus_1 ? "fn_plus_1"
                                                                     : "fn_plus_2");
    return make_check(id,
                      std::string("case-split values for d = ") + family_name(family) +
                          " match the formula and the scan, d <= " + std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(cases) + " cases equal" : firstbad,
                      "all cases equal");
}

Check check_ad2_positions(std::uint64_t dmax, std::uint64_t scan_cap) {
    auto fib_stream = words::make_stream("fib");
    std::string firstbad;
    std::uint64_t cases = 0;
    for (std::uint64_t d = 1; d <= dmax && firstbad.empty(); ++d) {
        mpz_class dz(static_cast<unsigned long>(d));
        if (longest_map(dz) != 2) continue;
        int want = fibanalysis::classify_ad2_position(dz);
        std::uint64_t i = fibanalysis::first_position(d, scan_cap, fib_stream.get());
        if (i != static_cast<std::uint64_t>(want))
            firstbad = "d=" + std::to_string(d) + ": i=" + std::to_string(i) +
                       ", direction rule gives " + std::to_string(want);
        ++cases;
    }
    return make_check("fib.ad2_first_positions",
                      "A(d)=2 implies i(d)=0 when stepping right and i(d)=2 when stepping "
                      "left, d <= " + std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(cases) + " cases match" : firstbad,
                      "direction rule matches scan");
}

Check check_i0_implies_a2(std::uint64_t dmax) {
    auto fib_stream = words::make_stream("fib");
    std::string firstbad;
    std::uint64_t hits = 0;
    for (std::uint64_t d = 1; d <= dmax && firstbad.empty(); ++d) {
        std::uint64_t a = longest_map_u64(d);
        if (mapsearch::has_map(*fib_stream, d, 0, a)) {
            ++hits;
            if (a != 2) firstbad = "d=" + std::to_string(d) + " has i(d)=0 but A(d)=" +
                                   std::to_string(a);
        }
    }
    return make_check("fib.i0_implies_a2",
                      "a maximal progression starting at 0 forces A(d)=2, d <= " +
                          std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(hits) + " differences with i(d)=0, all A=2"
                                       : firstbad,
                      "all A=2");
}

Check check_fn_plus2_a3i3(long n_lo, long n_hi, std::uint64_t scan_cap) {
    auto fib_stream = words::make_stream("fib");
    std::string firstbad;
    for (long n = n_lo; n <= n_hi && firstbad.empty(); ++n) {
        mpz_class dz = fibonacci(n) + 2;
        mpz_class a = longest_map(dz);
        std::uint64_t i = fibanalysis::first_position(dz.get_ui(), scan_cap, fib_stream.get());
        if (a != 3 || i != 3)
            firstbad = "n=" + std::to_string(n) + ": A=" + a.get_str() + ", i=" +
                       std::to_string(i);
    }
    return make_check("fib.fn_plus_2_a3_i3",
                      "A(F_n+2) = i(F_n+2) = 3 for " + std::to_string(n_lo) + " <= n <= " +
                          std::to_string(n_hi),
                      firstbad.empty(), firstbad.empty() ? "all (3,3)" : firstbad, "all (3,3)");
}

Check check_fib_over_k_list(long index_max) {
    // expected values of A(F_{n*alpha(k)}/k)
    struct Row {
        long k;
        long odd_val;   // value for odd n
        long even_val;  // value for even n
        long from_n;    // ignore n below this (d < 2 or published exception)
    };
    // k=5 has the single exception A(F_5/5) = A(1) = 2 at n=1.
    const Row rows[] = {{3, 2, 2, 1}, {4, 3, 3, 1}, {5, 4, 4, 2}, {6, 4, 4, 1},
                        {7, 5, 5, 1}, {8, 2, 5, 1}, {9, 6, 6, 1}, {10, 3, 7, 1}};
    std::string firstbad;
    long cases = 0;
    for (const Row& r : rows) {
        long alpha = static_cast<long>(fibanalysis::rank_of_apparition(
            static_cast<std::uint64_t>(r.k)));
        long n_max = index_max / alpha;
        auto vals = fibanalysis::a_fib_over_k(r.k, n_max);
        for (const auto& [n, a] : vals) {
            if (n < r.from_n) continue;
            long want = (n % 2 == 1) ? r.odd_val : r.even_val;
            if (a != want) {
                firstbad = "k=" + std::to_string(r.k) + ", n=" + std::to_string(n) + ": A=" +
                           a.get_str() + ", expected " + std::to_string(want);
                break;
            }
            ++cases;
        }
        if (!firstbad.empty()) break;
    }
    return make_check("fib.a_of_fib_over_k",
                      "A(F_(n*alpha(k))/k) takes its published finite value set for k = 3..10, "
                      "indices up to " + std::to_string(index_max),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(cases) + " values match" : firstbad,
                      "all values match");
}

Check check_half_fib(long nmax) {
    std::string firstbad;
    for (long n = 6; n <= nmax; n += 3) {
        mpz_class d = fibonacci(n) / 2;
        mpz_class lhs = fibanalysis::a_half_fib(n);
        mpz_class rhs = longest_map(d);
        if (lhs != rhs) {
            firstbad = "n=" + std::to_string(n) + ": formula " + lhs.get_str() + ", A(F_n/2) " +
                       rhs.get_str();
            break;
        }
    }
    return make_check("fib.a_half_fibonacci",
                      "A(F_n/2) = ceil(tau^(n-3)) + 1 + (n/3 mod 2) for 6 <= n <= " +
                          std::to_string(nmax) + ", 3 | n",
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal");
}

Check check_multiple_fib(std::uint64_t dmax) {
    std::string firstbad;
    std::uint64_t cases = 0;
    for (long n = 4; firstbad.empty(); ++n) {
        if (fibonacci(n) > static_cast<unsigned long>(dmax)) break;
        for (long k = 1;; ++k) {
            // precondition k <= tau^(n-2)
            if ((ZTau(k) - ZTau::tau_pow(n - 2)).sign() > 0) break;
            mpz_class d = mpz_class(k) * fibonacci(n);
            if (d > static_cast<unsigned long>(dmax)) break;
            mpz_class lhs = fibanalysis::a_multiple_fib(k, n);
            mpz_class rhs = longest_map(d);
            if (lhs != rhs) {
                firstbad = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
                break;
            }
            ++cases;
        }
    }
    return make_check("fib.a_multiple_fibonacci",
                      "A(k F_n) = ceil(tau^(n-1)/k) wherever k <= tau^(n-2), d <= " +
                          std::to_string(dmax),
                      firstbad.empty(),
                      firstbad.empty() ? std::to_string(cases) + " cases equal" : firstbad,
                      "all cases equal");
}

Check check_new_maxima(std::uint64_t dmax) {
    std::string firstbad;
    mpz_class running_max = 0;
    long n = 2;
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        mpz_class a = longest_map(mpz_class(static_cast<unsigned long>(d)));
        while (fibonacci(n) < static_cast<unsigned long>(d)) ++n;
        if (fibonacci(n) == static_cast<unsigned long>(d) && d >= 2) {
            if (a <= running_max) {
                firstbad = "d=F=" + std::to_string(d) + ": A=" + a.get_str() +
                           " does not exceed prior maximum " + running_max.get_str();
                break;
            }
        }
        if (a > running_max) running_max = a;
    }
    return make_check("fib.new_maxima_at_fibonacci",
                      "every Fibonacci difference sets a new maximum of A, d <= " +
                          std::to_string(dmax),
                      firstbad.empty(), firstbad.empty() ? "all new maxima" : firstbad,
                      "all new maxima");
}

Check check_scan_letter0(std::uint64_t dmax, std::uint64_t scan_cap) {
    auto fib_stream = words::make_stream("fib");
    std::string firstbad;
    for (std::uint64_t d = 1; d <= dmax && firstbad.empty(); ++d) {
        std::uint64_t a = longest_map_u64(d);
        std::uint64_t restricted = fibanalysis::first_position(d, scan_cap, fib_stream.get());
        std::uint64_t any = mapsearch::first_occurrence(*fib_stream, d, a, scan_cap);
        if (restricted != any || fib_stream->term(restricted) != '0')
            firstbad = "d=" + std::to_string(d) + ": restricted " + std::to_string(restricted) +
                       ", unrestricted " + std::to_string(any);
    }
    return make_check("fib.first_position_letter0",
                      "the 0-restricted scan equals the letter-agnostic scan and lands on a 0, "
                      "d <= " + std::to_string(dmax),
                      firstbad.empty(), firstbad.empty() ? "identical" : firstbad, "identical");
}

Check check_tm_equivalence(std::uint64_t terms) {
    auto sub = words::make_stream("tm");
    words::DfaoStream dfao(automata::builtin("tm"));
    std::string_view a = sub->prefix(terms);
    std::string_view b = dfao.prefix(terms);
    std::string firstbad;
    for (std::uint64_t n = 0; n < terms; ++n)
        if (a[n] != b[n]) {
            firstbad = "n=" + std::to_string(n);
            break;
        }
    return make_check("tm.generator_equivalence",
                      "substitution and binary-automaton generators agree on " +
                          std::to_string(terms) + " terms",
                      firstbad.empty(), firstbad.empty() ? "identical" : firstbad, "identical");
}

Check check_tm_pow2(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    std::string firstbad;
    for (int n = 0; n <= b.pow2_nmax && firstbad.empty(); ++n) {
        std::uint64_t d = 1ull << n;
        auto res = mapsearch::longest_in_window(*tm, d, b.window);
        if (res.best_len != 2 || res.saturated || res.first_pos != d)
            firstbad = "d=2^" + std::to_string(n) + ": best=" + std::to_string(res.best_len) +
                       ", first=" + std::to_string(res.first_pos) +
                       (res.saturated ? ", saturated" : "");
    }
    return make_check("tm.a_pow2",
                      "A(2^n) = 2 with i(2^n) = 2^n for n <= " + std::to_string(b.pow2_nmax),
                      firstbad.empty(), firstbad.empty() ? "all (2, 2^n)" : firstbad,
                      "best 2, first 2^n, unsaturated", CheckKind::bounded);
}

Check check_tm_odd_geq4(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    std::string firstbad;
    std::uint64_t worst = 0;
    for (std::uint64_t d = 3; d <= b.odd_dmax && firstbad.empty(); d += 2) {
        try {
            worst = std::max(worst, mapsearch::first_occurrence(*tm, d, 4, b.witness_cap));
        } catch (const ScanCapExceeded&) {
            firstbad = "d=" + std::to_string(d) + ": no length-4 progression within cap";
        }
    }
    return make_check("tm.odd_a_geq_4",
                      "every odd d in (1, " + std::to_string(b.odd_dmax) +
                          "] carries a length-4 progression",
                      firstbad.empty(),
                      firstbad.empty() ? "witnesses found, max first index " +
                                             std::to_string(worst)
                                       : firstbad,
                      "witness for every odd d");
}

Check check_tm_a11(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    auto res = mapsearch::longest_in_window(*tm, 11, b.window);
    bool pass = res.best_len == 4 && !res.saturated;
    return make_check("tm.a11", "A(11) = 4",
                      pass,
                      "best " + std::to_string(res.best_len) + ", first " +
                          std::to_string(res.first_pos) +
                          (res.saturated ? ", saturated" : ", unsaturated"),
                      "best 4, unsaturated", CheckKind::bounded);
}

Check check_tm_omax4(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    auto res35 = mapsearch::longest_in_window(*tm, 35, b.window);
    std::string firstbad;
    if (res35.best_len != 4 || res35.saturated)
        firstbad = "A(35): best=" + std::to_string(res35.best_len);
    for (std::uint64_t d = 37; d <= b.odd_dmax && firstbad.empty(); d += 2) {
        try {
            mapsearch::first_occurrence(*tm, d, 5, b.witness_cap);  // proves A(d) >= 5 != 4
        } catch (const ScanCapExceeded&) {
            firstbad = "d=" + std::to_string(d) + ": no length-5 witness within cap";
        }
    }
    return make_check("tm.largest_odd_a4",
                      "the largest odd d <= " + std::to_string(b.odd_dmax) +
                          " with A(d) = 4 is 35",
                      firstbad.empty(),
                      firstbad.empty() ? "A(35)=4; every larger odd d has a length-5 progression"
                                       : firstbad,
                      "A(35)=4 and no larger odd d with A=4", CheckKind::bounded);
}

Check check_tm_omax5(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    std::string firstbad;
    for (std::uint64_t d = 31; d <= b.odd_dmax && firstbad.empty(); d += 2) {
        if (d == 31 || d == 33 || d == 35) {
            auto res = mapsearch::longest_in_window(*tm, d, b.window);
            if (res.best_len == 5 || res.saturated)
                firstbad = "d=" + std::to_string(d) + ": best=" + std::to_string(res.best_len);
            continue;
        }
        try {
            mapsearch::first_occurrence(*tm, d, 6, b.witness_cap);  // proves A(d) >= 6 != 5
        } catch (const ScanCapExceeded&) {
            firstbad = "d=" + std::to_string(d) + ": no length-6 witness within cap";
        }
    }
    return make_check("tm.largest_odd_a5",
                      "no odd d in (29, " + std::to_string(b.odd_dmax) + "] has A(d) = 5",
                      firstbad.empty(), firstbad.empty() ? "none found" : firstbad, "none",
                      CheckKind::bounded);
}

Check check_tm_i_doubling(const TmBounds& b) {
    auto tm = words::make_stream("tm");
    std::string firstbad;
    for (std::uint64_t d0 : {1ull, 3ull, 5ull, 7ull, 9ull, 11ull}) {
        auto res = mapsearch::longest_in_window(*tm, d0, b.window);
        if (res.saturated) {
            firstbad = "d=" + std::to_string(d0) + ": saturated window";
            break;
        }
        std::uint64_t i0 = mapsearch::first_occurrence(*tm, d0, res.best_len, b.window);
        for (int n = 1; n <= b.doubling_nmax; ++n) {
            std::uint64_t d = d0 << n;
            std::uint64_t i = mapsearch::first_occurrence(*tm, d, res.best_len, b.window);
            if (i != (i0 << n)) {
                firstbad = "d=" + std::to_string(d0) + ", n=" + std::to_string(n) + ": i(" +
                           std::to_string(d) + ")=" + std::to_string(i) + " != " +
                           std::to_string(i0 << n);
                break;
            }
        }
        if (!firstbad.empty()) break;
    }
    return make_check("tm.i_doubling",
                      "i(2^n d) = 2^n i(d) for d in {1,3,5,7,9,11}, n <= " +
                          std::to_string(b.doubling_nmax),
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal",
                      CheckKind::bounded);
}

Check check_rs_pow2(const RsBounds& b) {
    auto rs = words::make_stream("rs");
    std::string firstbad;
    for (int n = 0; n <= b.pow2_nmax && firstbad.empty(); ++n) {
        std::uint64_t d = 1ull << n;
        auto res = mapsearch::longest_in_window(*rs, d, b.window);
        if (res.best_len != 4 || res.saturated || res.first_pos != 7 * d)
            firstbad = "d=2^" + std::to_string(n) + ": best=" + std::to_string(res.best_len) +
                       ", first=" + std::to_string(res.first_pos) +
                       (res.saturated ? ", saturated" : "");
    }
    return make_check("rs.a_i_pow2",
                      "A(2^n) = 4 and i(2^n) = 7*2^n for n <= " + std::to_string(b.pow2_nmax),
                      firstbad.empty(), firstbad.empty() ? "all (4, 7*2^n)" : firstbad,
                      "best 4, first 7*2^n, unsaturated", CheckKind::bounded);
}

Check check_conj_tm_first_positions(const ConjBounds& b) {
    auto tm = words::make_stream("tm");
    std::string firstbad;
    auto probe = [&](std::uint64_t d, std::uint64_t want) {
        if (!firstbad.empty()) return;
        auto res = mapsearch::longest_in_window(*tm, d, b.tm_window);
        if (res.saturated) {
            firstbad = "d=" + std::to_string(d) + ": saturated window";
            return;
        }
        std::uint64_t i = mapsearch::first_occurrence(*tm, d, res.best_len, b.tm_window);
        if (i != want)
            firstbad = "d=" + std::to_string(d) + ": i=" + std::to_string(i) + " != " +
                       std::to_string(want);
    };
    for (std::uint64_t n = 2; n <= 4; ++n) {
        probe((1ull << n) + 1, 3 * (1ull << (2 * n)) - (1ull << n) - 1);
        probe((1ull << (2 * n)) - 1, 3 * (1ull << (4 * n)) - (1ull << (2 * n)) + 1);
        probe((1ull << (2 * n + 1)) - 1, (1ull << (2 * n + 1)) - 1);
    }
    return make_check("conj.tm_first_positions",
                      "i(2^n+1) = 3*4^n - 2^n - 1, i(2^(2n)-1) = 3*16^n - 4^n + 1 and "
                      "i(2^(2n+1)-1) = 2^(2n+1) - 1 for n in {2,3,4}",
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal",
                      CheckKind::conjecture);
}

Check check_conj_fib_first_positions(const ConjBounds& b) {
    auto fib = words::make_stream("fib");
    std::string firstbad;
    // odd-indexed differences: i(F_{2n+1}) = F_{2n+3} - 2
    for (long n = 1; firstbad.empty(); ++n) {
        mpz_class d = fibonacci(2 * n + 1);
        if (d > 10'000) break;
        std::uint64_t i = fibanalysis::first_position(d.get_ui(), b.scan_cap, fib.get());
        mpz_class want = fibonacci(2 * n + 3) - 2;
        if (mpz_class(static_cast<unsigned long>(i)) != want)
            firstbad = "d=F_" + std::to_string(2 * n + 1) + "=" + d.get_str() + ": i=" +
                       std::to_string(i) + " != " + want.get_str();
    }
    // even-indexed differences: i(F_{2n}) = F_{4n} - 1
    for (long n = 1; firstbad.empty(); ++n) {
        mpz_class want = fibonacci(4 * n) - 1;
        if (want >= static_cast<unsigned long>(b.scan_cap)) break;
        mpz_class d = fibonacci(2 * n);
        std::uint64_t i = fibanalysis::first_position(d.get_ui(), b.scan_cap, fib.get());
        if (mpz_class(static_cast<unsigned long>(i)) != want)
            firstbad = "d=F_" + std::to_string(2 * n) + "=" + d.get_str() + ": i=" +
                       std::to_string(i) + " != " + want.get_str();
    }
    return make_check("conj.fib_first_positions",
                      "i(F_(2n+1)) = F_(2n+3) - 2 and i(F_(2n)) = F_(4n) - 1 within the scan cap",
                      firstbad.empty(), firstbad.empty() ? "all equal" : firstbad, "all equal",
                      CheckKind::conjecture);
}

Check check_conj_slope_bound(const ConjBounds& b) {
    std::string firstbad;
    for (std::uint64_t d = 1; d <= b.slope_dmax && firstbad.empty(); ++d) {
        mpz_class a = longest_map(mpz_class(static_cast<unsigned long>(d)));
        // (A-1)/d < sqrt5/tau  <=>  (A-1) tau < d (2 tau - 1)  <=>  d + (A-1-2d) tau < 0
        mpz_class coeff = a - 1 - 2 * mpz_class(static_cast<unsigned long>(d));
        if (ZTau(mpz_class(static_cast<unsigned long>(d)), coeff).sign() >= 0)
            firstbad = "d=" + std::to_string(d) + ": (A(d)-1)/d reaches sqrt5/tau";
    }
    return make_check("conj.slope_bound",
                      "(A(d)-1)/d < sqrt(5)/tau exactly, for d <= " + std::to_string(b.slope_dmax),
                      firstbad.empty(), firstbad.empty() ? "strict inequality everywhere" : firstbad,
                      "strict inequality", CheckKind::conjecture);
}

SuiteReport run_suite_fib(const FibBounds& b) {
    SuiteReport r;
    r.suite = "fib";
    r.checks.push_back(check_fib_formula_vs_index(b.formula_nmax));
    r.checks.push_back(check_ceil_identity(b.identity_nmax));
    r.checks.push_back(check_levelset_equivalence(b.levelset_dmax));
    r.checks.push_back(check_parity_law(b.levelset_dmax));
    r.checks.push_back(check_density(3, b.density_dmax, 0.2060, 0.005));
    r.checks.push_back(check_density(4, b.density_dmax, 0.2604, 0.005));
    r.checks.push_back(check_gd_equidistribution(b.density_dmax, 0.01));
    r.checks.push_back(check_fib_triple_equivalence(b.equivalence_terms));
    r.checks.push_back(check_family(fibanalysis::FibFamily::fib_minus_1, b.families_dmax,
                                    b.scan_cap));
    r.checks.push_back(check_family(fibanalysis::FibFamily::fib_plus_1, b.families_dmax,
                                    b.scan_cap));
    r.checks.push_back(check_family(fibanalysis::FibFamily::fib_plus_2, b.families_dmax,
                                    b.scan_cap));
    r.checks.push_back(check_ad2_positions(b.families_dmax, b.scan_cap));
    r.checks.push_back(check_i0_implies_a2(b.families_dmax));
    r.checks.push_back(check_fn_plus2_a3i3(8, 19, b.scan_cap));
    r.checks.push_back(check_fib_over_k_list(b.identity_nmax));
    r.checks.push_back(check_half_fib(b.identity_nmax));
    r.checks.push_back(check_multiple_fib(b.density_dmax));
    r.checks.push_back(check_new_maxima(std::min<std::uint64_t>(b.families_dmax, 10'000)));
    r.checks.push_back(check_scan_letter0(300, b.scan_cap));
    return r;
}

SuiteReport run_suite_tm(const TmBounds& b) {
    SuiteReport r;
    r.suite = "tm";
    r.checks.push_back(check_tm_equivalence(b.equivalence_terms));
    r.checks.push_back(check_tm_pow2(b));
    r.checks.push_back(check_tm_odd_geq4(b));
    r.checks.push_back(check_tm_a11(b));
    r.checks.push_back(check_tm_omax4(b));
    r.checks.push_back(check_tm_omax5(b));
    r.checks.push_back(check_tm_i_doubling(b));
    return r;
}

SuiteReport run_suite_rs(const RsBounds& b) {
    SuiteReport r;
    r.suite = "rs";
    r.checks.push_back(check_rs_pow2(b));
    return r;
}

SuiteReport run_suite_conjectures(const ConjBounds& b) {
    SuiteReport r;
    r.suite = "conjectures";
    r.checks.push_back(check_conj_tm_first_positions(b));
    r.checks.push_back(check_conj_fib_first_positions(b));
    r.checks.push_back(check_conj_slope_bound(b));
    return r;
}

SuiteReport run_verify(std::uint64_t d_max, std::uint64_t window, unsigned threads) {
    SuiteReport r;
    r.suite = "verify";
    if (d_max == 0) return r;
    if (window == 0) window = 1'000'000;
    if (threads == 0) threads = 1;

    std::vector<Check> checks(d_max);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        auto fib = words::make_stream("fib");
        for (std::uint64_t d = lo; d <= hi; ++d) {
            Check c;
            c.id = "verify.d=" + std::to_string(d);
            c.claim = "closed form equals unsaturated windowed search";
            c.kind = CheckKind::certified;
            try {
                std::uint64_t a = longest_map_u64(d);
                std::uint64_t i = fibanalysis::first_position(d, 10'000'000, fib.get());
                // window always covers the first maximal progression whole,
                // so best_len == A(d) is a containment fact, not luck
                std::uint64_t n = std::max(window, i + (a + 1) * d + 1);
                auto res = mapsearch::longest_in_window(*fib, d, n);
                bool contained = res.first_pos + res.best_len * d < n;
                c.pass = res.best_len == a && res.first_pos == i && contained;
                c.observed = "search: best=" + std::to_string(res.best_len) + ", first=" +
                             std::to_string(res.first_pos) +
                             (res.saturated ? " (edge streak present)" : "");
                c.expected = "closed form: A=" + std::to_string(a) + ", i=" + std::to_string(i);
            } catch (const Error& e) {
                c.pass = false;
                c.observed = e.what();
                c.expected = "no error";
            }
            checks[d - 1] = std::move(c);
        }
    };

    if (threads <= 1 || d_max < 16) {
        work(1, d_max);
    } else {
        threads = std::min<unsigned>(threads, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        std::uint64_t chunk = (d_max + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = 1 + t * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(d_max, lo + chunk - 1);
            if (lo > hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    r.checks = std::move(checks);
    return r;
}

}  // namespace fibmap::suites
