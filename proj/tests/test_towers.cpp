#include <doctest.h>

#include <cmath>

#include "refcox/gen.hpp"
#include "refcox/towers.hpp"

using namespace refcox;

namespace {
IntPoly P(const char* text) { return IntPoly::parse(text); }
}

TEST_CASE("chain towers over a 2-chain") {
    TowerReport report = build_tower(cartan_from_poset(chain(2)), "c2", 4);
    REQUIRE(report.levels.size() == 5);
    CHECK(report.levels[0].phi == P("x+1"));
    CHECK(report.levels[1].phi == P("x^2+x+1"));
    CHECK(report.levels[2].phi == P("x^3+x^2+x+1"));
    CHECK(report.levels[3].phi == P("x^4+x^3+x^2+x+1"));
    CHECK(report.degree_ok);
    CHECK(report.recurrence_ok);
    CHECK(report.sturm0_ok);
    CHECK(report.interlacing_ok);
    for (const auto& level : report.levels) CHECK(level.mahler.exact_one);
    CHECK_THROWS_AS(build_tower(cartan_from_poset(chain(2)), "c2", 1), input_error);
    CHECK_THROWS_AS(build_tower(cartan_from_poset(chain(2)), "zz", 3), input_error);
}

TEST_CASE("interlaced verdicts") {
    std::vector<IntPoly> good{P("x+1"), P("x^2+x+1"), P("x^3+x^2+x+1")};
    auto verdict = verify_interlaced(good);
    CHECK(verdict.degree_ok);
    CHECK(verdict.recurrence_ok);
    CHECK(verdict.sturm0_ok);
    CHECK(verdict.all());

    // a constant base representative passes vacuously
    std::vector<IntPoly> from_empty{IntPoly{1}, P("x+1"), P("x^2+1")};
    CHECK(verify_interlaced(from_empty).sturm0_ok);

    // a constant sequence satisfies the recurrence identically; only the
    // degree condition catches it
    std::vector<IntPoly> stuck{P("x+1"), P("x+1"), P("x+1")};
    auto constant = verify_interlaced(stuck);
    CHECK(!constant.degree_ok);
    CHECK(constant.recurrence_ok);

    std::vector<IntPoly> broken{P("x+1"), P("x^2+x+1"), P("x^3+1")};
    auto bad = verify_interlaced(broken);
    CHECK(bad.degree_ok);
    CHECK(!bad.recurrence_ok);

    CHECK_THROWS_AS(verify_interlaced({P("x+1"), P("x^2+1")}), input_error);
}

TEST_CASE("tower laws on random bases") {
    Rng rng(91);
    const IntPoly xp1{1, 1};
    const IntPoly x{0, 1};
    for (int trial = 0; trial < 8; ++trial) {
        CartanAlgebra lambda = random_cartan(rng, rng.in_range(2, 6));
        std::string v = lambda.labels()[static_cast<size_t>(rng.below(lambda.size()))];
        TowerReport report = build_tower(lambda, v, 4);
        CHECK(report.degree_ok);
        CHECK(report.recurrence_ok);
        for (size_t i = 1; i + 1 < report.levels.size(); ++i) {
            CHECK(report.levels[i + 1].phi ==
                  xp1 * report.levels[i].phi - x * report.levels[i - 1].phi);
            CHECK(report.levels[i + 1].q ==
                  x * report.levels[i].q - report.levels[i - 1].q);
        }
    }
}

TEST_CASE("reference tower: growing the marked canonical algebra") {
    TowerReport report = counterexample("ext-canonical-234");
    REQUIRE(report.levels.size() == 4);
    CHECK(report.degree_ok);
    CHECK(report.recurrence_ok);
    CHECK(report.sturm0_ok);
    // measures of levels 1..3 refute "if the top is one, all are one"
    CHECK(std::abs(report.levels[1].mahler.measure - 1.280638) < 1e-3);
    CHECK(std::abs(report.levels[2].mahler.measure - 1.176281) < 1e-3);
    CHECK(report.levels[3].mahler.exact_one);
}

TEST_CASE("reference tower: the nine-vertex tree") {
    TowerReport report = counterexample("tree-11");
    REQUIRE(report.levels.size() == 4);
    CHECK(tree_fixture().size() == 9);
    CHECK(report.degree_ok);
    CHECK(report.recurrence_ok);
    CHECK(report.sturm0_ok);
    // strictly decreasing measures refute "lower levels stay below the top"
    CHECK(std::abs(report.levels[1].mahler.measure - 1.722084) < 1e-3);
    CHECK(std::abs(report.levels[2].mahler.measure - 1.640034) < 1e-3);
    CHECK(std::abs(report.levels[3].mahler.measure - 1.582347) < 1e-3);
}

TEST_CASE("reference tower: the affine star") {
    TowerReport report = counterexample("e8-star");
    REQUIRE(report.levels.size() == 4);
    CHECK(report.degree_ok);
    CHECK(report.recurrence_ok);
    CHECK(report.sturm0_ok);
    CHECK(report.levels[1].mahler.exact_one);
    CHECK(std::abs(report.levels[2].mahler.measure - 1.176281) < 1e-3);
    CHECK(std::abs(report.levels[3].mahler.measure - 1.230391) < 1e-3);
    // the top exceeds the product of the two below it
    CHECK(report.levels[3].mahler.measure >
          report.levels[1].mahler.measure * report.levels[2].mahler.measure);

    CHECK_THROWS_AS(counterexample("nope"), input_error);
}
