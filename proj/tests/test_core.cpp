#include <catch2/catch_amalgamated.hpp>

#include "niltrace/matrix.hpp"
#include "niltrace/rng.hpp"
#include "niltrace/tuple.hpp"
#include "niltrace/words.hpp"

using namespace niltrace;

namespace {
Mat E(int i, int j, int n = 3) { return Mat::unit(n, i, j); }
}

TEST_CASE("rational arithmetic is exact and canonical") {
    REQUIRE(rat(1, 3) + rat(1, 6) == rat(1, 2));
    REQUIRE(parse_rat("-14/21") == rat(-2, 3));
    REQUIRE(to_string(rat(-2, 4)) == "-1/2");
    REQUIRE(to_string(rat(7)) == "7");
    REQUIRE_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rat("0.5"), std::invalid_argument);

    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const Rat a = rat(rng.uniform(-40, 40), rng.uniform(1, 17));
        const Rat b = rat(rng.uniform(-40, 40), rng.uniform(1, 17));
        const Rat c = rat(rng.uniform(-40, 40), rng.uniform(1, 17));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("trace_product examples") {
    REQUIRE(trace_product({E(1, 2, 2), E(2, 1, 2)}) == 1);
    REQUIRE(trace_product({E(1, 2, 2), E(1, 2, 2)}) == 0);
    REQUIRE(trace_product({jordan2(), E(3, 2)}) == 1);
    REQUIRE_THROWS_AS(trace_product({E(1, 2, 2), E(1, 2, 3)}), std::invalid_argument);
}

TEST_CASE("sigma2 examples") {
    REQUIRE(sigma2(Mat::identity(3)) == 3);
    REQUIRE(sigma2(jordan2()) == 0);
    const Mat c(3, {0, -1, -1, 0, 1, 1, 1, 0, -1});
    REQUIRE(sigma2(c) == 0);
    REQUIRE_THROWS_AS(sigma2(Mat::identity(2)), std::invalid_argument);
}

TEST_CASE("nilpotency predicate and coefficient test agree") {
    REQUIRE(is_nilpotent(jordan2()));
    REQUIRE_FALSE(is_nilpotent(E(1, 1)));
    const Mat d(3, {0, 0, 0, 0, 1, 1, 0, -1, -1});
    REQUIRE(is_nilpotent(d));

    Rng rng(11);
    for (int k = 0; k < 800; ++k) {
        // random matrix, sometimes genuinely nilpotent, mostly not
        Mat m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = rng.rat_in(-2, 2);
        const bool coeffs = m.trace() == 0 && sigma2(m) == 0 && m.det() == 0;
        const Mat m3 = m * m * m;
        REQUIRE(is_nilpotent(m) == coeffs);
        REQUIRE(is_nilpotent(m) == (m3 == Mat::zero(3)));
    }
}

TEST_CASE("conjugation examples and invariance") {
    REQUIRE(conjugate(Mat::identity(3), jordan2()) == jordan2());
    // permutation swapping basis vectors 1 and 2 carries E21 to E12
    Mat p(3);
    p.at(0, 1) = 1;
    p.at(1, 0) = 1;
    p.at(2, 2) = 1;
    REQUIRE(conjugate(p, E(2, 1)) == E(1, 2));
    REQUIRE_THROWS_AS(conjugate(Mat::zero(3), jordan2()), std::invalid_argument);

    Rng rng(13);
    for (int k = 0; k < 1000; ++k) {
        const Mat a = random_nilpotent(rng, 3);
        const Mat g = random_unimodular(rng, 3);
        REQUIRE(is_nilpotent(conjugate(g, a)));
    }
}

TEST_CASE("trace_product is cyclic and conjugation invariant") {
    Rng rng(17);
    for (int k = 0; k < 300; ++k) {
        const Mat a = random_nilpotent(rng, 3);
        const Mat b = random_nilpotent(rng, 3);
        const Mat c = random_nilpotent(rng, 3);
        REQUIRE(trace_product({a, b, c}) == trace_product({b, c, a}));
        REQUIRE(trace_product({a, b, c}) == trace_product({c, a, b}));
        const Mat g = random_unimodular(rng, 3);
        REQUIRE(trace_product({conjugate(g, a), conjugate(g, b), conjugate(g, c)}) ==
                trace_product({a, b, c}));
    }
}

TEST_CASE("tuple validation names the offender") {
    REQUIRE_THROWS_WITH(NilTuple::make({jordan2(), E(1, 1)}),
                        Catch::Matchers::ContainsSubstring("matrix 2"));
    REQUIRE_THROWS_AS(NilTuple::make({Mat::zero(2), Mat::zero(3)}), std::invalid_argument);
    const NilTuple t = NilTuple::make({jordan2(), E(3, 2)});
    REQUIRE(t.count() == 2);
    REQUIRE(t.dim() == 3);
}

TEST_CASE("matrix inverse is exact") {
    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
        const Mat g = random_unimodular(rng, 3);
        REQUIRE(g * inverse(g) == Mat::identity(3));
        const Mat g2 = random_unimodular(rng, 2);
        REQUIRE(g2 * inverse(g2) == Mat::identity(2));
    }
}
