#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refcox/numeric.hpp"

namespace refcox {

/*
  Dense univariate polynomial over the integers.

  Coefficients are stored in ascending degree order with no trailing zero;
  the zero polynomial has an empty coefficient vector and degree -1.
  Values are immutable in spirit: every operation returns a fresh polynomial.
*/
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static IntPoly constant(Int c) {
        IntPoly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }
    // c * x^k
    static IntPoly monomial(Int c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1, standing in for "minus infinity".
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;
    Int coeff(int k) const { return k >= 0 && k <= deg() ? coeffs_[k] : Int(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly scale(const Int& c) const;
    // p * x^k
    IntPoly shift(int k) const;
    IntPoly derivative() const;
    // p(x^2)
    IntPoly compose_square() const;

    Int eval(const Int& t) const;
    Rational eval(const Rational& t) const;
    double eval_double(double t) const;

    // Quotient when the division is exact over the integers, nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;
    // Remove the largest power of x dividing the polynomial would change
    // semantics; this is strict division by x, failing loudly on a nonzero
    // constant term.
    IntPoly divide_by_x_exact() const;

    bool is_monic() const { return !is_zero() && leading() == 1; }
    // True iff coeff(i) == coeff(n-i) for 0 <= i <= n. Requires deg <= n.
    bool reciprocal_check(int n) const;

    Int content() const;
    // content-free copy with the leading sign preserved
    IntPoly primitive_part() const;

    // Fixed descending-degree text form, e.g. "x^3+x^2+x+1", "-2*x^2-2*x".
    std::string str() const;
    static IntPoly parse(const std::string& text);

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

// n-th cyclotomic polynomial, n >= 1. Results are memoized process-wide;
// the cache takes shared locks for reads and an exclusive lock per first write.
IntPoly cyclotomic(int n);

// Euler totient, used to bound cyclotomic trial division.
long totient(long n);

// Unique polynomial of degree <= degree_bound through the given points,
// via exact Newton divided differences. Throws input_error on duplicate
// abscissae or when the data does not fit the bound, internal_error if a
// coefficient comes out non-integral.
IntPoly interpolate(const std::vector<std::pair<Int, Int>>& points, int degree_bound);

// 1 + x + ... + x^(m-1), the m-term geometric sum (x^m - 1)/(x - 1).
IntPoly geometric_sum(int m);

} // namespace refcox
