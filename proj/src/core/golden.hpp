#ifndef FIBMAP_CORE_GOLDEN_HPP
#define FIBMAP_CORE_GOLDEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/ztau.hpp"

namespace fibmap::golden {

// Half-open/closed interval inside [0,1] with exact endpoints.
struct Interval {
    ZTau lo, hi;
    bool lo_open = true;
    bool hi_open = true;

    bool contains(const ZTau& x) const;
    std::string to_string() const;
};

// I0 = (tau^-2, 1) codes the letter 0, I1 = [0, tau^-2) codes the
// letter 1 in the rotation picture of the Fibonacci word.
const Interval& interval_i0();
const Interval& interval_i1();

// floor(d*tau), exactly: (d + isqrt(5 d^2)) div 2.
mpz_class floor_mult_tau(const mpz_class& d);

// {d*tau} = d*tau - floor(d*tau), an element of [0,1) with integer
// coefficients.
ZTau frac_mult_tau(const mpz_class& d);

// Step distance g(d) = min({d*tau}, 1 - {d*tau}), in (0, 1/2).
ZTau step_distance(const mpz_class& d);

enum class StepDirection { right, left };

// right iff {d*tau} < 1/2 (the orbit of the rotation by d*tau drifts
// rightward inside each interval), left otherwise.
StepDirection step_direction(const mpz_class& d);

// g(n*d) computed through min({n*g(d)}, 1 - {n*g(d)}) rather than from
// n*d directly; equal to step_distance(n*d).
ZTau g_of_multiple(const mpz_class& n, const mpz_class& d);

// m-th letter of the Fibonacci word via the rotation sequence:
// '0' when {(m+1)*tau} lies in I0, '1' when it lies in I1.
char rotation_term(const mpz_class& m);
char rotation_term(std::uint64_t m);

struct OrbitPoint {
    mpz_class index;   // i + n*d
    ZTau point;        // {(i + n*d)*tau}
    int interval_tag;  // 0 for I0, 1 for I1
};

// The orbit segment {(i+n*d)*tau} for n = 0..count-1, classified.
std::vector<OrbitPoint> orbit_points(const mpz_class& i, const mpz_class& d,
                                     std::uint64_t count);

}  // namespace fibmap::golden

#endif
