#include <catch2/catch_amalgamated.hpp>

#include "niltrace/io.hpp"
#include "niltrace/rng.hpp"

using namespace niltrace;
using nlohmann::json;

TEST_CASE("document parsing") {
    const auto j = json::parse(R"({
        "size": 3,
        "matrices": [[[0,1,0],[0,0,1],[0,0,0]],
                     [[0,"1/2",0],[0,0,0],["-3/2",1,0]]]
    })");
    const NilTuple t = tuple_from_json(j);
    REQUIRE(t.count() == 2);
    REQUIRE(t[0] == jordan2());
    REQUIRE(t[1].at(0, 1) == rat(1, 2));
    REQUIRE(t[1].at(2, 0) == rat(-3, 2));
}

TEST_CASE("rejection diagnostics name the matrix and the failing coefficient") {
    const auto bad = json::parse(R"({
        "size": 3,
        "matrices": [[[0,1,0],[0,0,1],[0,0,0]],
                     [[1,0,0],[0,0,0],[0,0,0]]]
    })");
    REQUIRE_THROWS_WITH(tuple_from_json(bad),
                        Catch::Matchers::ContainsSubstring("matrix 2") &&
                            Catch::Matchers::ContainsSubstring("trace"));

    const auto bad2 = json::parse(R"({
        "size": 3,
        "matrices": [[[0,1,0],[1,0,0],[0,0,0]]]
    })");
    // trace is zero but sigma2 is not
    REQUIRE_THROWS_WITH(tuple_from_json(bad2),
                        Catch::Matchers::ContainsSubstring("sigma2"));

    const auto bad3 = json::parse(R"({"size": 4, "matrices": []})");
    REQUIRE_THROWS_AS(tuple_from_json(bad3), std::invalid_argument);

    const auto bad4 = json::parse(R"({
        "size": 2,
        "matrices": [[[0,0.5],[0,0]]]
    })");
    REQUIRE_THROWS_AS(tuple_from_json(bad4), std::invalid_argument);
}

TEST_CASE("serialize then parse is the identity on canonical documents") {
    Rng rng(91);
    for (int k = 0; k < 100; ++k) {
        const NilTuple t = random_tuple(rng, 3, 3);
        REQUIRE(tuple_from_json(tuple_to_json(t)) == t);
    }
    for (int k = 0; k < 50; ++k) {
        const NilTuple t = random_tuple(rng, 2, 2);
        REQUIRE(tuple_from_json(tuple_to_json(t)) == t);
    }
    // fractions survive the round trip as strings
    Mat m(3);
    m.at(0, 1) = rat(1, 2);
    m.at(0, 2) = rat(-7, 3);
    const NilTuple t{{m}};
    const json j = tuple_to_json(t);
    REQUIRE(j["matrices"][0][0][1] == "1/2");
    REQUIRE(tuple_from_json(j) == t);
}
