#include <doctest.h>

#include "core/errors.hpp"
#include "core/ztau.hpp"

using fibmap::golden::ZTau;
using fibmap::golden::fibonacci;

TEST_CASE("tau satisfies its defining polynomial") {
    ZTau t = ZTau::tau();
    CHECK(t * t == t + ZTau(1));
    CHECK((t * t - t - ZTau(1)).sign() == 0);
}

TEST_CASE("tau powers follow the Fibonacci recursion") {
    // tau^n = F_n tau + F_{n-1}
    CHECK(ZTau::tau_pow(4) == ZTau(2, 3));
    CHECK(ZTau::tau_pow(5) == ZTau(3, 5));
    for (long n = 1; n <= 90; ++n)
        CHECK(ZTau::tau_pow(n) == ZTau(fibonacci(n - 1), fibonacci(n)));
    // tau^2 * tau^-2 = 1, and tau^-2 = 2 - tau
    CHECK(ZTau::tau_pow(-2) == ZTau(2, -1));
    CHECK(ZTau::tau_pow(2) * ZTau::tau_pow(-2) == ZTau(1));
    for (long n = -30; n <= 30; ++n)
        CHECK(ZTau::tau_pow(n) * ZTau::tau_pow(-n) == ZTau(1));
}

TEST_CASE("field operations are exact") {
    ZTau t = ZTau::tau();
    ZTau third(1, 0, 3);
    CHECK(third + third + third == ZTau(1));
    CHECK((t / t) == ZTau(1));
    CHECK((ZTau(1) / (ZTau(2) - t)) == t * t);  // 1/tau^-2 = tau^2
    ZTau x(3, -7, 5), y(-2, 9, 11);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(-(-x) == x);
    CHECK_THROWS_AS(x / ZTau(0), fibmap::DivisionByZero);
}

TEST_CASE("sign is decided over the integers") {
    CHECK((ZTau(1) - ZTau::tau()).sign() == -1);  // 1 - tau < 0
    CHECK((ZTau::tau() * ZTau::tau() - ZTau::tau() - ZTau(1)).sign() == 0);
    CHECK(ZTau(13, -8).sign() == 1);  // 13 - 8 tau = tau^-6 > 0
    CHECK(ZTau(13, -8) == ZTau::tau_pow(-6));
    CHECK(ZTau(0).sign() == 0);
    CHECK(ZTau(-5, 3).sign() == -1);  // 3 tau < 5
    CHECK(ZTau(-4, 3).sign() == 1);   // 3 tau > 4
}

TEST_CASE("floor and ceil") {
    CHECK(ZTau::tau().floor() == 1);
    CHECK(ZTau::tau().ceil() == 2);
    CHECK(ZTau(-1, 1).floor() == 0);        // tau - 1 ~ 0.618
    CHECK(ZTau(7, 0, 2).floor() == 3);      // 7/2
    CHECK(ZTau(7, 0, 2).ceil() == 4);
    CHECK(ZTau(-7, 0, 2).floor() == -4);
    CHECK(ZTau(6, 0, 3).ceil() == 2);       // exact integer
    CHECK((-ZTau::tau()).floor() == -2);    // -1.618...
    CHECK(ZTau(0).frac() == ZTau(0));
    for (long n = 1; n <= 60; ++n) {
        ZTau p = ZTau::tau_pow(n);
        CHECK(ZTau(p.floor()) <= p);
        CHECK(p < ZTau(p.floor() + 1));
    }
}

TEST_CASE("canonical form is reduced and unique") {
    CHECK(ZTau(2, 4, 6) == ZTau(1, 2, 3));
    CHECK(ZTau(1, 1, -1) == ZTau(-1, -1, 1));
    CHECK(ZTau(3, -6, 3).num_a() == 1);
    CHECK(ZTau(0, 0, 7) == ZTau(0));
    CHECK(ZTau(5, 10, 5).den() == 1);
}

TEST_CASE("sign agrees with a floating estimate away from zero") {
    // pseudo-random coefficients; the float estimate is safe because the
    // values are far from zero relative to double precision
    std::uint64_t state = 0x243f6a8885a308d3ull;
    auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 2000001) - 1000000;
    };
    for (int it = 0; it < 10000; ++it) {
        long a = next(), b = next(), den = std::abs(next()) % 1000 + 1;
        ZTau x(a, b, den);
        double approx = x.to_double();
        if (std::abs(approx) < 1e-3) continue;
        CHECK(x.sign() == (approx > 0 ? 1 : -1));
    }
}
