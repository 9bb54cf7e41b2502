#include "refcox/polyspec.hpp"

#include <algorithm>
#include <cmath>

#include "refcox/errors.hpp"

namespace refcox {

CyclotomicProfile cyclotomic_profile(const IntPoly& p) {
    if (p.is_zero()) throw input_error("cyclotomic_profile of the zero polynomial");
    CyclotomicProfile result;
    result.remainder = p;
    const long d = p.deg();
    // totient(n) >= sqrt(n/2), so indices beyond 2*d^2 cannot divide.
    for (long n = 1; n <= 2 * d * d && result.remainder.deg() > 0; ++n) {
        if (totient(n) > result.remainder.deg()) continue;
        IntPoly phi = cyclotomic(static_cast<int>(n));
        while (true) {
            auto q = result.remainder.divide_exact(phi);
            if (!q) break;
            result.remainder = std::move(*q);
            ++result.factors[static_cast<int>(n)];
        }
    }
    return result;
}

bool is_cyclotomic_type(const IntPoly& p) {
    if (!p.is_monic()) throw input_error("is_cyclotomic_type requires a monic polynomial");
    return cyclotomic_profile(p).remainder == IntPoly{1};
}

IntPoly represent(const IntPoly& p, int n) {
    if (p.deg() > n) throw input_error("represent: degree exceeds n");
    if (!p.reciprocal_check(n))
        throw input_error("represent: polynomial is not self-reciprocal with respect to n");
    // Peel p(x^2) top-down against x^(n-k) * (x^2+1)^k.
    IntPoly residual = p.compose_square();
    const IntPoly x2p1{1, 0, 1};
    std::vector<Int> q(static_cast<size_t>(n) + 1, Int(0));
    std::vector<IntPoly> powers(static_cast<size_t>(n) + 1);  // (x^2+1)^k
    powers[0] = IntPoly{1};
    for (int k = 1; k <= n; ++k) powers[static_cast<size_t>(k)] = powers[static_cast<size_t>(k - 1)] * x2p1;
    for (int k = n; k >= 0; --k) {
        Int b = residual.coeff(n + k);
        if (b != 0) {
            q[static_cast<size_t>(k)] = b;
            residual = residual - powers[static_cast<size_t>(k)].scale(b).shift(n - k);
        }
    }
    if (!residual.is_zero())
        throw internal_error("represent: nonzero residual " + residual.str());
    return IntPoly(std::move(q));
}

IntPoly expand_representation(const IntPoly& q, int n) {
    if (n < 0 || q.deg() > n) throw input_error("expand_representation: degree exceeds n");
    // Horner in u = x + 1/x on Laurent polynomials stored with an offset:
    // value = sum_i laurent[i] x^(i - center).
    std::vector<Int> laurent{Int(0)};
    int center = 0;
    for (int k = q.deg(); k >= 0; --k) {
        // laurent = laurent * (x + 1/x) + q_k
        std::vector<Int> next(laurent.size() + 2, Int(0));
        for (size_t i = 0; i < laurent.size(); ++i) {
            next[i + 2] += laurent[i];
            next[i] += laurent[i];
        }
        ++center;
        next[static_cast<size_t>(center)] += q.coeff(k);
        laurent = std::move(next);
    }
    // multiply by x^n: exponents become i - center + n, all nonnegative
    std::vector<Int> coeffs(laurent.size() + static_cast<size_t>(n), Int(0));
    for (size_t i = 0; i < laurent.size(); ++i) {
        int e = static_cast<int>(i) - center + n;
        if (laurent[i] != 0 && e < 0) throw internal_error("expand_representation: negative exponent");
        if (laurent[i] != 0) coeffs[static_cast<size_t>(e)] = laurent[i];
    }
    return IntPoly(std::move(coeffs));
}

namespace {

// Remainder of a / b over Q[x], scaled back to a primitive integer
// polynomial with its sign preserved.
IntPoly rational_rem_primitive(const IntPoly& a, const IntPoly& b) {
    std::vector<Rational> rem(a.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeffs()[i]);
    int rd = a.deg();
    auto lead_is_zero = [&] { return rd >= 0 && rem[static_cast<size_t>(rd)].num == 0; };
    while (lead_is_zero()) --rd;
    const Rational blead{b.leading()};
    while (rd >= b.deg() && rd >= 0) {
        Rational f = rem[static_cast<size_t>(rd)] / blead;
        for (int j = 0; j <= b.deg(); ++j)
            rem[static_cast<size_t>(rd - b.deg() + j)] =
                rem[static_cast<size_t>(rd - b.deg() + j)] - f * Rational(b.coeffs()[static_cast<size_t>(j)]);
        --rd;
        while (lead_is_zero()) --rd;
    }
    if (rd < 0) return {};
    // common denominator, then primitive part; positive scaling only
    Int den = 1;
    for (int i = 0; i <= rd; ++i) den = den / gcd_int(den, rem[static_cast<size_t>(i)].den) * rem[static_cast<size_t>(i)].den;
    std::vector<Int> ints(static_cast<size_t>(rd) + 1);
    for (int i = 0; i <= rd; ++i)
        ints[static_cast<size_t>(i)] = rem[static_cast<size_t>(i)].num * div_exact(den, rem[static_cast<size_t>(i)].den);
    return IntPoly(std::move(ints)).primitive_part();
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int variations_at(const std::vector<IntPoly>& chain, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(p.eval(t).sign());
    return sign_changes(signs);
}

int variations_at_infinity(const std::vector<IntPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sign_of(p.leading());
        if (!positive && p.deg() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_changes(signs);
}

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const IntPoly& q) {
    Int maxabs = 0;
    for (const auto& c : q.coeffs()) maxabs = std::max(maxabs, Int(abs(c)));
    return Rational(maxabs + abs(q.leading()), abs(q.leading()));
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    while (!g.is_zero()) {
        IntPoly r = rational_rem_primitive(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero() && sign_of(f.leading()) < 0) f = -f;
    return f;
}

std::vector<IntPoly> sturm_chain(const IntPoly& q) {
    if (q.is_zero()) throw input_error("sturm_chain of the zero polynomial");
    std::vector<IntPoly> chain;
    chain.push_back(q.primitive_part());
    if (q.deg() == 0) return chain;
    chain.push_back(q.derivative().primitive_part());
    while (!chain.back().is_zero() && chain.back().deg() > 0) {
        IntPoly r = rational_rem_primitive(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sturm_count_interval(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

bool sturm_real_simple(const IntPoly& q) {
    if (q.is_zero()) throw input_error("sturm_real_simple of the zero polynomial");
    if (q.deg() == 0) return true;
    if (poly_gcd(q, q.derivative()).deg() != 0) return false;
    auto chain = sturm_chain(q);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true) == q.deg();
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& q, const Rational& tol) {
    if (q.is_zero()) throw input_error("isolate_real_roots of the zero polynomial");
    if (tol.sign() <= 0) throw input_error("isolate_real_roots: tolerance must be positive");
    std::vector<std::pair<Rational, Rational>> intervals;
    if (q.deg() == 0) return intervals;
    auto chain = sturm_chain(q);
    Rational bound = root_bound(q);
    struct Segment { Rational lo, hi; int count; };
    std::vector<Segment> stack;
    int total = sturm_count_interval(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    const Rational half(Int(1), Int(2));
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.count == 1 && seg.hi - seg.lo <= tol) {
            intervals.push_back({seg.lo, seg.hi});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) * half;
        int left = sturm_count_interval(chain, seg.lo, mid);
        int right = seg.count - left;
        // Push right first so output comes out sorted ascending.
        if (right > 0) stack.push_back({mid, seg.hi, right});
        if (left > 0) stack.push_back({seg.lo, mid, left});
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return intervals;
}

bool check_interlacing(const IntPoly& q1, const IntPoly& q2, const Rational& tol) {
    if (q2.deg() != q1.deg() + 1)
        throw input_error("check_interlacing: degrees must differ by exactly one");
    if (!sturm_real_simple(q1) || !sturm_real_simple(q2))
        throw input_error("check_interlacing: both polynomials must have real simple roots");
    if (q1.deg() == 0) return true;  // a constant interlaces a linear trivially
    if (poly_gcd(q1, q2).deg() != 0) return false;  // a shared root breaks strict interlacing

    auto iv1 = isolate_real_roots(q1, tol);
    auto iv2 = isolate_real_roots(q2, tol);
    auto chain1 = sturm_chain(q1);
    auto chain2 = sturm_chain(q2);
    // Shrink intervals until the 2n+1 of them are pairwise disjoint; the
    // polynomials are coprime, so this terminates.
    const Rational half(Int(1), Int(2));
    auto shrink = [&](std::pair<Rational, Rational>& iv, const std::vector<IntPoly>& chain) {
        Rational mid = (iv.first + iv.second) * half;
        if (sturm_count_interval(chain, iv.first, mid) == 1)
            iv.second = mid;
        else
            iv.first = mid;
    };
    auto disjoint = [](const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
        return a.second < b.first || b.second < a.first;
    };
    for (bool again = true; again;) {
        again = false;
        for (auto& a : iv1)
            for (auto& b : iv2)
                if (!disjoint(a, b)) {
                    shrink(a, chain1);
                    shrink(b, chain2);
                    again = true;
                }
    }
    // Merge-sort the intervals; the pattern must alternate q2,q1,q2,...,q2.
    struct Tagged { Rational lo; int which; };
    std::vector<Tagged> all;
    for (const auto& iv : iv1) all.push_back({iv.first, 1});
    for (const auto& iv : iv2) all.push_back({iv.first, 2});
    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.lo < b.lo; });
    if (all.size() != static_cast<size_t>(2 * q2.deg() - 1)) return false;
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i].which != (i % 2 == 0 ? 2 : 1)) return false;
    return true;
}

std::vector<std::complex<double>> aberth_roots(const IntPoly& p, double tol) {
    if (p.deg() < 1) return {};
    const int n = p.deg();
    std::vector<double> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0, d = 0;
        for (int i = n; i >= 0; --i) {
            d = d * z + v;
            v = v * z + c[static_cast<size_t>(i)];
        }
        return std::pair{v, d};
    };
    double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<size_t>(i)] / c[static_cast<size_t>(n)]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle = 2.0 * M_PI * i / n + 0.4;
        z[static_cast<size_t>(i)] = std::polar(0.5 * radius + 0.5, angle);
    }
    const int cap = 10000;
    for (int iter = 0; iter < cap; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            auto [v, d] = eval(z[static_cast<size_t>(i)]);
            std::complex<double> ratio = (d == 0.0) ? std::complex<double>(0) : v / d;
            std::complex<double> repel = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) repel += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> w = ratio / (1.0 - ratio * repel);
            z[static_cast<size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < tol) return z;
    }
    throw convergence_error("aberth iteration did not converge within 10000 sweeps");
}

MahlerResult mahler_measure(const IntPoly& p, double tol) {
    if (p.is_zero()) throw input_error("mahler_measure of the zero polynomial");
    if (!p.is_monic()) throw input_error("mahler_measure requires a monic polynomial");
    MahlerResult result;
    auto profile = cyclotomic_profile(p);
    if (profile.remainder == IntPoly{1}) {
        result.exact_one = true;
        return result;
    }
    auto roots = aberth_roots(profile.remainder, tol);
    double measure = 1.0;
    double residual = 0.0;
    for (const auto& z : roots) {
        double a = std::abs(z);
        if (a > 1.0) {
            measure *= a;
            result.roots_outside_unit.push_back(z);
        }
        std::complex<double> v = 0;
        for (int i = profile.remainder.deg(); i >= 0; --i)
            v = v * z + profile.remainder.coeffs()[static_cast<size_t>(i)].get_d();
        residual = std::max(residual, std::abs(v));
    }
    result.measure = measure;
    result.residual_bound = residual;
    return result;
}

} // namespace refcox
