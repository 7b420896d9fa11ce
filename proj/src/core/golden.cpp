#include "core/golden.hpp"

#include "core/errors.hpp"

namespace fibmap::golden {

bool Interval::contains(const ZTau& x) const {
    int cl = (x - lo).sign();
    if (cl < 0 || (cl == 0 && lo_open)) return false;
    int ch = (x - hi).sign();
    if (ch > 0 || (ch == 0 && hi_open)) return false;
    return true;
}

std::string Interval::to_string() const {
    std::string s(lo_open ? "(" : "[");
    s += lo.to_string() + ", " + hi.to_string();
    s += hi_open ? ")" : "]";
    return s;
}

const Interval& interval_i0() {
    static const Interval i0{ZTau::tau_pow(-2), ZTau(1), true, true};
    return i0;
}

const Interval& interval_i1() {
    static const Interval i1{ZTau(0), ZTau::tau_pow(-2), false, true};
    return i1;
}

mpz_class floor_mult_tau(const mpz_class& d) {
    if (d < 1) throw InvalidArgument("floor_mult_tau: d must be >= 1");
    mpz_class s, t = 5 * d * d;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return (d + s) / 2;
}

ZTau frac_mult_tau(const mpz_class& d) { return ZTau(-floor_mult_tau(d), d); }

ZTau step_distance(const mpz_class& d) {
    ZTau f = frac_mult_tau(d);
    ZTau other = ZTau(1) - f;
    return f < other ? f : other;
}

StepDirection step_direction(const mpz_class& d) {
    ZTau f = frac_mult_tau(d);
    // {d*tau} = 1/2 is impossible (irrational), so the comparison is strict.
    return (f - ZTau(1, 0, 2)).sign() < 0 ? StepDirection::right : StepDirection::left;
}

ZTau g_of_multiple(const mpz_class& n, const mpz_class& d) {
    if (n < 1 || d < 1) throw InvalidArgument("g_of_multiple: n, d must be >= 1");
    ZTau ng = ZTau(n) * step_distance(d);
    ZTau f = ng.frac();
    ZTau other = ZTau(1) - f;
    return f < other ? f : other;
}

char rotation_term(const mpz_class& m) {
    if (m < 0) throw InvalidArgument("rotation_term: m must be >= 0");
    // {(m+1)tau} > tau^-2 = 2 - tau  <=>  (m+2)tau - (floor((m+1)tau)+2) > 0
    mpz_class q = floor_mult_tau(m + 1);
    ZTau test(-(q + 2), m + 2);
    return test.sign() > 0 ? '0' : '1';
}

char rotation_term(std::uint64_t m) { return rotation_term(mpz_class(static_cast<unsigned long>(m))); }

std::vector<OrbitPoint> orbit_points(const mpz_class& i, const mpz_class& d,
                                     std::uint64_t count) {
    if (i < 1 || d < 1) throw InvalidArgument("orbit_points: i, d must be >= 1");
    if (count < 1) throw InvalidArgument("orbit_points: count must be >= 1");
    std::vector<OrbitPoint> pts;
    pts.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        mpz_class idx = i + mpz_class(static_cast<unsigned long>(n)) * d;
        ZTau p = frac_mult_tau(idx);
        pts.push_back({idx, p, interval_i0().contains(p) ? 0 : 1});
    }
    return pts;
}

}  // namespace fibmap::golden
