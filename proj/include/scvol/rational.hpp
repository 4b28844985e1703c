/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers in canonical form.
 *
 * Every value satisfies: denominator > 0, gcd(|numerator|, denominator) = 1,
 * and zero is stored as 0/1. Canonical form is restored after every
 * arithmetic operation, so equality is plain field comparison.
 */
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace scvol {

/// Arbitrary-precision signed integer (GMP).
using Int = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den);
    Rational(long num, long den);

    /// Exact conversion of a finite double (every finite double is dyadic).
    static Rational from_double(double x);

    /// Parses "p/q" or bare "p"; the result is canonicalized.
    static Rational from_string(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    double to_double() const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;
    /// Always "p/q", e.g. "3/1"; the wire form used by JSON and CSV output.
    std::string fraction_str() const;

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rational& a, const Rational& b);

private:
    void canonicalize();

    Int num_;  // carries the sign
    Int den_;  // always > 0
};

Rational abs(const Rational& r);

/// r^e for any integer exponent; throws for 0^e with e < 0.
Rational pow(const Rational& r, long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace scvol
