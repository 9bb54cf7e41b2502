#include <doctest.h>

#include <atomic>
#include <thread>

#include "refcox/gen.hpp"
#include "refcox/intpoly.hpp"

using namespace refcox;

namespace {
IntPoly P(const char* text) { return IntPoly::parse(text); }
}

TEST_CASE("ring operations") {
    CHECK(P("x+1") * P("x+1") == P("x^2+2*x+1"));
    CHECK(P("x^2+x+1") + IntPoly{} == P("x^2+x+1"));
    // square of x^2-1, the Coxeter polynomial of the smallest oriented cycle
    CHECK(P("x^2-1") * P("x^2-1") == P("x^4-2*x^2+1"));
    CHECK(P("x^2-1") - P("x^2-1") == IntPoly{});
    CHECK((-P("x")).coeff(1) == -1);
    CHECK(P("x+1").scale(Int(0)).is_zero());
    CHECK(P("x+1").shift(2) == P("x^3+x^2"));
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_poly(rng, rng.in_range(0, 5), 6);
        IntPoly b = random_poly(rng, rng.in_range(0, 5), 6);
        IntPoly c = random_poly(rng, rng.in_range(0, 5), 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("degree bookkeeping") {
    CHECK(IntPoly{}.deg() == -1);
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{5}.deg() == 0);
    CHECK(P("x^4+1").deg() == 4);
    CHECK(IntPoly{0, 0, 0}.is_zero());  // trailing zeros normalize away
}

TEST_CASE("evaluation") {
    CHECK(P("x^2+x+1").eval(Int(1)) == 3);
    CHECK(P("x^3+x^2+x+1").eval(Int(-1)) == 0);
    CHECK(P("x^4+x^3+x+1").eval(Int(2)) == 27);
    CHECK(P("x^2-2").eval(Rational(Int(3), Int(2))) == Rational(Int(1), Int(4)));
}

TEST_CASE("exact division") {
    CHECK(*P("x^2-1").divide_exact(P("x-1")) == P("x+1"));
    CHECK(!P("x^2+x+1").divide_exact(P("x+1")).has_value());
    // (x-1)^4 (x+1)^4 / (x^2-1) = (x-1)^3 (x+1)^3, both sides by expansion
    IntPoly xm1 = P("x-1"), xp1 = P("x+1");
    IntPoly big = xm1 * xm1 * xm1 * xm1 * xp1 * xp1 * xp1 * xp1;
    IntPoly expect = xm1 * xm1 * xm1 * xp1 * xp1 * xp1;
    CHECK(*big.divide_exact(P("x^2-1")) == expect);
    CHECK_THROWS_AS((void)P("x").divide_exact(IntPoly{}), input_error);
    // divisible over Q but not over Z
    CHECK(!P("x").divide_exact(IntPoly{0, 2}).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P("x-1"));
    CHECK(cyclotomic(2) == P("x+1"));
    CHECK(cyclotomic(7) == *P("x^7-1").divide_exact(P("x-1")));
    CHECK(cyclotomic(12) == P("x^4-x^2+1"));
    CHECK_THROWS_AS(cyclotomic(0), input_error);
}

TEST_CASE("cyclotomic product property up to 200") {
    for (int n = 1; n <= 200; ++n) {
        CHECK(cyclotomic(n).is_monic());
        IntPoly prod{1};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        IntPoly xn = IntPoly::monomial(Int(1), n) - IntPoly{1};
        CHECK(prod == xn);
    }
}

TEST_CASE("interpolation") {
    using Pt = std::pair<Int, Int>;
    CHECK(interpolate({Pt{0, 1}, Pt{1, 3}, Pt{-1, 1}}, 2) == P("x^2+x+1"));
    CHECK(interpolate({Pt{0, 1}, Pt{1, 2}}, 1) == P("x+1"));
    CHECK(interpolate({Pt{0, 1}, Pt{1, 1}, Pt{2, 1}}, 2) == IntPoly{1});
    CHECK_THROWS_AS(interpolate({Pt{1, 1}, Pt{1, 2}}, 1), input_error);
    CHECK_THROWS_AS(interpolate({Pt{0, 1}}, 1), input_error);
    // three points not on a line, bound 1
    CHECK_THROWS_AS(interpolate({Pt{0, 0}, Pt{1, 1}, Pt{2, 4}}, 1), input_error);
}

TEST_CASE("interpolation inverts pointwise evaluation") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = rng.in_range(0, 12);
        IntPoly p = random_poly(rng, deg, 9);
        std::vector<std::pair<Int, Int>> pts;
        for (int t = 0; t <= deg; ++t) pts.emplace_back(Int(t), p.eval(Int(t)));
        CHECK(interpolate(pts, deg) == p);
    }
}

TEST_CASE("reciprocity") {
    CHECK(P("x^2+x+1").reciprocal_check(2));
    CHECK(P("-x^2-x").reciprocal_check(3));
    CHECK(!P("x^2+1").reciprocal_check(3));
    CHECK(IntPoly{}.reciprocal_check(4));
    CHECK_THROWS_AS(P("x^3").reciprocal_check(2), input_error);
}

TEST_CASE("text form round trips") {
    CHECK(P("x^3+x^2+x+1").str() == "x^3+x^2+x+1");
    CHECK(P("-2*x^2-2*x").str() == "-2*x^2-2*x");
    CHECK(IntPoly{}.str() == "0");
    CHECK(P("0").is_zero());
    CHECK(P(" -x^2 + 3 ") == IntPoly{3, 0, -1});
    CHECK(P("2x") == IntPoly{0, 2});  // the '*' is optional on input
    CHECK_THROWS_AS(IntPoly::parse("x^"), input_error);
    CHECK_THROWS_AS(IntPoly::parse(""), input_error);
    CHECK_THROWS_AS(IntPoly::parse("x++1"), input_error);
    CHECK_THROWS_AS(IntPoly::parse("x 1"), input_error);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly p = random_poly(rng, rng.in_range(0, 9), 14);
        CHECK(IntPoly::parse(p.str()) == p);
    }
}

TEST_CASE("geometric sum") {
    CHECK(geometric_sum(0).is_zero());
    CHECK(geometric_sum(1) == IntPoly{1});
    CHECK(geometric_sum(4) == P("x^3+x^2+x+1"));
}

TEST_CASE("cyclotomic cache under concurrent readers") {
    std::vector<std::thread> pool;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&ok, t] {
            for (int n = 1 + t; n <= 120; n += 3) {
                IntPoly prod{1};
                for (int d = 1; d <= n; ++d)
                    if (n % d == 0) prod = prod * cyclotomic(d);
                if (prod != IntPoly::monomial(Int(1), n) - IntPoly{1}) ok = false;
            }
        });
    for (auto& t : pool) t.join();
    CHECK(ok.load());
}
