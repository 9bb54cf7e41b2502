#include <doctest.h>

#include <algorithm>

#include "refcox/coxeter.hpp"
#include "refcox/gen.hpp"
#include "refcox/report.hpp"

using namespace refcox;

TEST_CASE("poset files round trip") {
    Rng rng(111);
    for (int trial = 0; trial < 20; ++trial) {
        Poset p = random_poset(rng, rng.in_range(0, 6));
        Poset back = poset_from_json(poset_to_json(p));
        CHECK(back == p);  // cover pairs regenerate the full order
    }
    CHECK_THROWS_AS(poset_from_json(Json::object()), input_error);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}, {"relations", {{"a", "zz"}}}}),
                    input_error);
}

TEST_CASE("cartan files round trip") {
    Rng rng(112);
    for (int trial = 0; trial < 20; ++trial) {
        CartanAlgebra c = random_cartan(rng, rng.in_range(1, 6));
        CHECK(cartan_from_json(cartan_to_json(c)) == c);
    }
    Json bad = {{"labels", {"a", "b"}}, {"matrix", {{1, 0}, {5, 1}}}};
    CHECK(cartan_from_json(bad).entry(1, 0) == 5);
    bad["matrix"][0][0] = 3;
    CHECK_THROWS_AS(cartan_from_json(bad), input_error);
}

TEST_CASE("polynomial JSON form") {
    IntPoly p = IntPoly::parse("x^3-2*x+7");
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(p).dump() == "[7,-2,0,1]");
    // large coefficients travel as strings
    IntPoly big{std::vector<Int>{Int("123456789012345678901234567890"), Int(1)}};
    CHECK(poly_from_json(poly_to_json(big)) == big);
    CHECK_THROWS_AS(poly_from_json(Json::object()), input_error);
}

TEST_CASE("certificates round trip") {
    ClassCCertificate cert{{{}, {}, {1, 1, 1, 1}}, {{"v1/c0"}, {"v1/c1"}, {2, 1, 1, 1}}};
    ClassCCertificate back = certificate_from_json(certificate_to_json(cert));
    REQUIRE(back.size() == 2);
    CHECK(back[1].down_set == cert[1].down_set);
    CHECK(back[1].up_set == cert[1].up_set);
    CHECK(back[1].atilde_runs == cert[1].atilde_runs);
    CHECK_THROWS_AS(certificate_from_json(Json::object()), input_error);
}

TEST_CASE("tower serialization") {
    TowerReport report = counterexample("e8-star");
    Json j = tower_to_json(report);
    CHECK(j["levels"].size() == 4);
    CHECK(j["levels"][0].contains("phi"));
    CHECK(j["sturm0_ok"].get<bool>());
    std::string csv = tower_to_csv(report);
    CHECK(csv.find("level,degree,mahler") == 0);
    CHECK(csv.find("1.000000000000") != std::string::npos);
    auto lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 5);  // header plus four levels
}

TEST_CASE("measure formatting is fixed width") {
    CHECK(format_measure(1.0) == "1.000000000000");
    CHECK(format_measure(1.1762808182599) == "1.176280818260");
}

TEST_CASE("mahler and profile serialization") {
    auto m = mahler_measure(coxeter_poly(star({2, 3, 7})));
    Json j = mahler_to_json(m);
    CHECK(j["measure"].get<std::string>().substr(0, 8) == "1.176280");
    CHECK(!j["exact_one"].get<bool>());
    CHECK(j["roots_outside_unit"].size() == 1);

    auto profile = cyclotomic_profile(IntPoly::parse("x^4-2*x^2+1"));
    Json pj = profile_to_json(profile);
    CHECK(pj["factors"]["1"] == 2);
    CHECK(pj["factors"]["2"] == 2);
    CHECK(pj["remainder"] == "1");
}

TEST_CASE("file loading diagnostics") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), input_error);
}
