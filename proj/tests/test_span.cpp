#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "niltrace/span.hpp"

using namespace niltrace;

namespace {
std::vector<std::vector<Word>> sorted_factors(const std::vector<ProductExpr>& pes) {
    std::vector<std::vector<Word>> out;
    for (const auto& pe : pes) out.push_back(pe.factors);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return to_string(ProductExpr{a}) < to_string(ProductExpr{b});
              });
    return out;
}
}

TEST_CASE("random_nilpotent basics") {
    Rng rng(61);
    for (int k = 0; k < 1000; ++k) {
        const Mat a = random_nilpotent(rng, 3);
        REQUIRE(a.trace() == 0);
        REQUIRE(sigma2(a) == 0);
        REQUIRE(a.det() == 0);
        REQUIRE(is_nilpotent(a));
    }
    for (int k = 0; k < 200; ++k) REQUIRE(is_nilpotent(random_nilpotent(rng, 2)));

    // fixed seed, identical output
    Rng r1(99), r2(99);
    for (int k = 0; k < 20; ++k) REQUIRE(random_nilpotent(r1, 3) == random_nilpotent(r2, 3));
}

TEST_CASE("product_basis enumerations") {
    const auto p33 = builtin_set(SetName::P33);
    REQUIRE(product_basis({1, 1, 0}, p33).empty());

    const auto sq = product_basis({2, 2, 0}, p33);
    REQUIRE(sq.size() == 1);
    REQUIRE(sq[0].factors == std::vector<Word>{Word{1, 2}, Word{1, 2}});

    const auto c221 = product_basis({2, 2, 1}, p33);
    REQUIRE(c221.size() == 4);
    const auto got = sorted_factors(c221);
    const auto want = sorted_factors({ProductExpr{{Word{1, 2, 3}, Word{1, 2}}},
                                      ProductExpr{{Word{1, 3, 2}, Word{1, 2}}},
                                      ProductExpr{{Word{1, 1, 2}, Word{2, 3}}},
                                      ProductExpr{{Word{1, 2, 2}, Word{1, 3}}}});
    REQUIRE(got == want);

    REQUIRE(product_basis({3, 2, 1}, p33).size() == 7);
    REQUIRE(product_basis({2, 2, 2}, p33).size() == 13);
}

TEST_CASE("in_span: zero target and empty candidates") {
    const auto dec = in_span(WordCombo{{Word{1}}, {Rat(0)}}, {}, 0, 5);
    REQUIRE(dec.member);
    REQUIRE(dec.coefficients.empty());

    // tr(Y1) vanishes identically on nilpotents: in the empty span
    const auto dec2 = in_span(WordCombo::single(Word{1}), {}, 0, 5);
    REQUIRE(dec2.member);
}

TEST_CASE("in_span recovers the exact quadratic trace identity") {
    // tr(ABAB) = tr(AB)^2 - 2 tr(A^2 B^2) on nilpotent 3x3 pairs
    const std::vector<ProductExpr> cands = {ProductExpr{{Word{1, 2}, Word{1, 2}}},
                                            ProductExpr{{Word{1, 1, 2, 2}}}};
    const auto dec = in_span(WordCombo::single(Word{1, 2, 1, 2}), cands, 20, 7);
    REQUIRE(dec.member);
    REQUIRE(dec.coefficients == std::vector<Rat>{Rat(1), Rat(-2)});
}

TEST_CASE("in_span refutations are seed independent") {
    const auto p33 = builtin_set(SetName::P33);
    const auto cands = product_basis({3, 2, 1}, p33);
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const auto dec = in_span(WordCombo::single(Word{1, 1, 2, 2, 1, 3}), cands, 0, seed);
        REQUIRE_FALSE(dec.member);
    }
}

TEST_CASE("the (2,2,1) generators are outside their decomposable span") {
    const auto p33 = builtin_set(SetName::P33);
    const auto cands = product_basis({2, 2, 1}, p33);
    REQUIRE_FALSE(in_span(WordCombo::single(Word{1, 1, 2, 2, 3}), cands, 0, 23).member);
    REQUIRE_FALSE(in_span(WordCombo::single(Word{2, 2, 1, 1, 3}), cands, 0, 23).member);
}

TEST_CASE("indecomposability report") {
    const auto rep = indecomposability_report(11);
    REQUIRE(rep.pass);
    // (a), (b), (c) plus the ten multidegree groups of P'33
    REQUIRE(rep.items.size() == 13);
    for (const auto& it : rep.items) {
        INFO(it.name << ": " << it.detail);
        REQUIRE(it.pass);
    }
}

TEST_CASE("rank gain of the (2,2,1) pair is exactly two") {
    const auto p33 = builtin_set(SetName::P33);
    const auto cands = product_basis({2, 2, 1}, p33);
    REQUIRE(span_rank_gain(cands, {Word{1, 1, 2, 2, 3}, Word{2, 2, 1, 1, 3}}, 0, 17) == 2);
    // a decomposable extra word gains nothing
    REQUIRE(span_rank_gain(cands, {}, 0, 17) == 0);
}

TEST_CASE("generation check covers the short two-letter classes") {
    const auto rep = generation_check(19);
    REQUIRE(rep.pass);
    // 11 classes per unordered pair of letters
    REQUIRE(rep.checked == 33);
}
