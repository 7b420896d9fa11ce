#ifndef FIBMAP_CORE_ZTAU_HPP
#define FIBMAP_CORE_ZTAU_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fibmap::golden {

// An exact element of Q(tau), tau = (1+sqrt(5))/2, stored as
//
//     (a + b*tau) / den
//
// with arbitrary-precision integers a, b and den > 0, gcd(a, b, den) = 1.
// Since tau is irrational the canonical form is unique, so equality is
// coefficient equality. Multiplication reduces with tau^2 = tau + 1;
// division goes through the conjugate (a+b) - b*tau and the integer norm
// a^2 + ab - b^2. No operation ever touches floating point; to_double()
// exists for display and statistics only.
class ZTau {
  public:
    ZTau() : a_(0), b_(0), den_(1) {}
    ZTau(long value) : a_(value), b_(0), den_(1) {}
    explicit ZTau(mpz_class value) : a_(std::move(value)), b_(0), den_(1) {}
    ZTau(mpz_class a, mpz_class b, mpz_class den = 1);

    static const ZTau& tau();
    // Exact tau^n for any integer n. Positive powers come from
    // tau^n = F_n*tau + F_{n-1}; negative ones from
    // tau^-n = (-1)^n * (F_{n+1} - F_n*tau).
    static ZTau tau_pow(long n);

    ZTau operator-() const;
    ZTau operator+(const ZTau& o) const;
    ZTau operator-(const ZTau& o) const;
    ZTau operator*(const ZTau& o) const;
    ZTau operator/(const ZTau& o) const;  // throws DivisionByZero

    ZTau inverse() const;

    // Sign of the value, decided purely over the integers: with integer
    // coefficients the question reduces to comparing (2a+b)^2 against
    // 5b^2, with case analysis on the signs of 2a+b and b.
    int sign() const;

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integer() const { return b_ == 0 && den_ == 1; }

    // Exact floor. For b != 0 this uses
    //   floor((a + b*tau)/den) = floor((2a + b + b*sqrt5) / (2*den))
    // where floor(b*sqrt5) = isqrt(5 b^2) for b > 0 and
    // -isqrt(5 b^2) - 1 for b < 0; irrationality makes the inner floor
    // transfer to the outer quotient.
    mpz_class floor() const;
    mpz_class ceil() const;
    ZTau frac() const;  // x - floor(x), in [0, 1)

    bool operator==(const ZTau& o) const { return a_ == o.a_ && b_ == o.b_ && den_ == o.den_; }
    bool operator!=(const ZTau& o) const { return !(*this == o); }
    bool operator<(const ZTau& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const ZTau& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const ZTau& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const ZTau& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;

    const mpz_class& num_a() const { return a_; }
    const mpz_class& num_b() const { return b_; }
    const mpz_class& den() const { return den_; }

    // Canonical text form "(a+b*tau)/den", den omitted when 1.
    std::string to_string() const;

  private:
    void canonicalize();

    mpz_class a_, b_, den_;
};

// F_n with arbitrary precision, cached.
mpz_class fibonacci(long n);

}  // namespace fibmap::golden

#endif
