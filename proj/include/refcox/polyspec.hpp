#pragma once

#include <complex>
#include <map>
#include <vector>

#include "refcox/intpoly.hpp"

namespace refcox {

// Factorization input = remainder * prod Phi_n^{m_n}, with the remainder
// divisible by no cyclotomic polynomial.
struct CyclotomicProfile {
    std::map<int, int> factors;  // index n -> multiplicity
    IntPoly remainder;
};

struct MahlerResult {
    double measure = 1.0;
    // measure == 1 certified symbolically (remainder after cyclotomic
    // stripping is the constant 1), not by numerics.
    bool exact_one = false;
    std::vector<std::complex<double>> roots_outside_unit;
    double residual_bound = 0.0;
};

// Trial-divides by Phi_n for every candidate 1 <= n <= 2*deg^2 whose totient
// fits the remaining degree, repeating each division until failure.
CyclotomicProfile cyclotomic_profile(const IntPoly& p);

// True iff p is a product of cyclotomic polynomials. Requires p monic.
bool is_cyclotomic_type(const IntPoly& p);

// The polynomial q with p(x^2) = x^n * q(x + x^{-1}). Requires deg p <= n
// and p self-reciprocal with respect to n.
IntPoly represent(const IntPoly& p, int n);

// x^n * q(x + x^{-1}), the inverse direction, by Horner evaluation over
// Laurent polynomials.
IntPoly expand_representation(const IntPoly& q, int n);

// Sturm chain of the primitive part, with primitive-part reduction of each
// remainder to limit coefficient growth.
std::vector<IntPoly> sturm_chain(const IntPoly& q);

// Number of distinct real roots of q in the half-open interval (a, b].
int sturm_count_interval(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b);

// True iff all complex roots of q are real and simple. Constants are
// vacuously real and simple.
bool sturm_real_simple(const IntPoly& q);

// Disjoint rational intervals (lo, hi], one per distinct real root,
// each narrower than tol.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& q, const Rational& tol);

// True iff exactly one root of q1 lies between each pair of consecutive
// roots of q2. Requires deg q2 == deg q1 + 1 and both real and simple.
bool check_interlacing(const IntPoly& q1, const IntPoly& q2, const Rational& tol);

// Mahler measure: strips the cyclotomic profile symbolically, then runs
// simultaneous (Aberth) iteration on the remainder. Requires p monic.
MahlerResult mahler_measure(const IntPoly& p, double tol = 1e-12);

// All complex roots of p by Aberth iteration (cap 10000 sweeps).
std::vector<std::complex<double>> aberth_roots(const IntPoly& p, double tol = 1e-12);

// gcd over Q[x], returned as a primitive integer polynomial.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

} // namespace refcox
