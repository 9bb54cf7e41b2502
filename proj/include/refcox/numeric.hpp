#pragma once

#include <gmpxx.h>

#include <string>

#include "refcox/errors.hpp"

namespace refcox {

// All exact arithmetic runs on GMP integers; 64-bit overflows already in
// fraction-free elimination on 10x10 matrices.
using Int = mpz_class;

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient a/b when b is known to divide a.
inline Int div_exact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int sign_of(const Int& a) { return sgn(a); }

// Reduced fraction with positive denominator.
struct Rational {
    Int num;
    Int den;

    Rational() : num(0), den(1) {}
    Rational(Int n) : num(std::move(n)), den(1) {}
    Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw input_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = gcd_int(abs(num), den);
        if (g > 1) { num = div_exact(num, g); den = div_exact(den, g); }
    }

    bool is_integer() const { return den == 1; }
    int sign() const { return sgn(num); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw input_error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    std::string str() const {
        return den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
    }
};

} // namespace refcox
