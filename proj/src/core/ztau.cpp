#include "core/ztau.hpp"

#include <cmath>
#include <mutex>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace fibmap::golden {

namespace {

mpz_class isqrt5_sq(const mpz_class& b) {
    mpz_class r, t = 5 * b * b;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return r;
}

mpz_class fdiv(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

mpz_class fibonacci(long n) {
    if (n < 0) throw InvalidArgument("fibonacci: negative index");
    static std::vector<mpz_class> cache = {0, 1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(n)];  // by value: the vector reallocates
}

ZTau::ZTau(mpz_class a, mpz_class b, mpz_class den)
    : a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero("ZTau: zero denominator");
    canonicalize();
}

void ZTau::canonicalize() {
    if (den_ < 0) {
        a_ = -a_;
        b_ = -b_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        den_ /= g;
    }
}

const ZTau& ZTau::tau() {
    static const ZTau t(0, 1);
    return t;
}

ZTau ZTau::tau_pow(long n) {
    if (n == 0) return ZTau(1);
    if (n > 0) return ZTau(fibonacci(n - 1), fibonacci(n));
    long m = -n;
    if (m % 2 == 0) return ZTau(fibonacci(m + 1), -fibonacci(m));
    return ZTau(-fibonacci(m + 1), fibonacci(m));
}

ZTau ZTau::operator-() const { return ZTau(-a_, -b_, den_); }

ZTau ZTau::operator+(const ZTau& o) const {
    return ZTau(a_ * o.den_ + o.a_ * den_, b_ * o.den_ + o.b_ * den_, den_ * o.den_);
}

ZTau ZTau::operator-(const ZTau& o) const {
    return ZTau(a_ * o.den_ - o.a_ * den_, b_ * o.den_ - o.b_ * den_, den_ * o.den_);
}

ZTau ZTau::operator*(const ZTau& o) const {
    // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) t
    return ZTau(a_ * o.a_ + b_ * o.b_, a_ * o.b_ + o.a_ * b_ + b_ * o.b_, den_ * o.den_);
}

ZTau ZTau::inverse() const {
    if (is_zero()) throw DivisionByZero("ZTau: inverse of zero");
    mpz_class norm = a_ * a_ + a_ * b_ - b_ * b_;
    return ZTau(den_ * (a_ + b_), -den_ * b_, norm);
}

ZTau ZTau::operator/(const ZTau& o) const { return *this * o.inverse(); }

int ZTau::sign() const {
    // den_ > 0, so only a + b*tau matters. a + b*tau > 0 iff
    // 2a + b > -b*sqrt5.
    mpz_class x = 2 * a_ + b_;
    const mpz_class& y = b_;
    int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx >= 0 && sy > 0) return 1;
    if (sx <= 0 && sy < 0) return -1;
    mpz_class l = x * x, r = 5 * y * y;
    if (l == r) throw InternalError("ZTau::sign: (2a+b)^2 == 5b^2 with b != 0");
    if (sx >= 0) return l > r ? 1 : -1;
    return l > r ? -1 : 1;
}

mpz_class ZTau::floor() const {
    if (b_ == 0) return fdiv(a_, den_);
    mpz_class x = 2 * a_ + b_;
    if (b_ > 0)
        x += isqrt5_sq(b_);
    else
        x -= isqrt5_sq(b_) + 1;
    return fdiv(x, 2 * den_);
}

mpz_class ZTau::ceil() const {
    if (b_ == 0 && mpz_divisible_p(a_.get_mpz_t(), den_.get_mpz_t())) return a_ / den_;
    return floor() + 1;
}

ZTau ZTau::frac() const { return *this - ZTau(floor()); }

double ZTau::to_double() const {
    static const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;
    return (a_.get_d() + b_.get_d() * kTau) / den_.get_d();
}

std::string ZTau::to_string() const {
    std::string s = "(" + a_.get_str();
    if (sgn(b_) >= 0) s += "+";
    s += b_.get_str() + "*tau)";
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
}

}  // namespace fibmap::golden
