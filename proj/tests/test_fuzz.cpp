#include <catch2/catch_amalgamated.hpp>

#include "niltrace/fuzz.hpp"

using namespace niltrace;

TEST_CASE("conjugate pairs are never separated") {
    const auto s33 = builtin_set(SetName::S33);
    const auto p33 = builtin_set(SetName::P33);
    for (int k = 0; k < 200; ++k) {
        Rng rng = Rng::derive(71, k);
        auto [a, b] = gen_pair(PairFamily::Conjugate, rng);
        REQUIRE_FALSE(separate(a, b, p33));
    }
}

TEST_CASE("strict upper pairs evaluate to zero everywhere") {
    const auto p33 = builtin_set(SetName::P33);
    for (int k = 0; k < 100; ++k) {
        Rng rng = Rng::derive(73, k);
        auto [a, b] = gen_pair(PairFamily::StrictUpper, rng);
        for (const Rat& v : evaluate_set(a, p33)) REQUIRE(v == 0);
        for (const Rat& v : evaluate_set(b, p33)) REQUIRE(v == 0);
    }
}

TEST_CASE("template families produce S33-agreeing nilpotent pairs") {
    const auto s33 = builtin_set(SetName::S33);
    for (TemplateId id : all_templates()) {
        int distinct = 0;
        for (int k = 0; k < 200; ++k) {
            Rng rng = Rng::derive(79, k, static_cast<std::uint64_t>(id));
            auto [a, b] = gen_pair(PairFamily::Template, rng, id);
            INFO(to_string(id) << " trial " << k);
            for (const Mat& m : a.mats) REQUIRE(is_nilpotent(m));
            for (const Mat& m : b.mats) REQUIRE(is_nilpotent(m));
            REQUIRE_FALSE(separate(a, b, s33));
            distinct += !(a == b);
        }
        INFO(to_string(id));
        REQUIRE(distinct > 150);  // the families are not the diagonal
    }
}

TEST_CASE("fuzz_theorem smoke run has no violations and is reproducible") {
    const auto r1 = fuzz_theorem(300, 81, PairFamily::Conjugate);
    REQUIRE(r1.checked == 300);
    REQUIRE(r1.s33_agreeing == 300);
    REQUIRE(r1.violations.empty());

    for (TemplateId id : all_templates()) {
        const auto r = fuzz_theorem(100, 83, PairFamily::Template, id);
        INFO(to_string(id));
        REQUIRE(r.s33_agreeing == 100);
        REQUIRE(r.template_rejected == 0);
        REQUIRE(r.violations.empty());
    }

    const auto a = fuzz_theorem(200, 85, PairFamily::Independent);
    const auto b = fuzz_theorem(200, 85, PairFamily::Independent);
    REQUIRE(a.checked == b.checked);
    REQUIRE(a.s33_agreeing == b.s33_agreeing);
    // non-vacuity: generic pairs are separated
    REQUIRE((a.checked - a.s33_agreeing) * 10 > a.checked * 9);
}

TEST_CASE("entry range is configurable per family") {
    const auto s33 = builtin_set(SetName::S33);
    for (TemplateId id : {TemplateId::A21_BothNonzero, TemplateId::A21_Spectator,
                          TemplateId::D_RowKilled}) {
        for (int k = 0; k < 50; ++k) {
            Rng rng = Rng::derive(97, k, static_cast<std::uint64_t>(id));
            auto [a, b] = gen_pair(PairFamily::Template, rng, id, -6, 6);
            INFO(to_string(id) << " trial " << k);
            for (const Mat& m : a.mats) REQUIRE(is_nilpotent(m));
            for (const Mat& m : b.mats) REQUIRE(is_nilpotent(m));
            REQUIRE_FALSE(separate(a, b, s33));
        }
    }
    const auto rep = fuzz_theorem(100, 97, PairFamily::Conjugate, {}, -1, 1);
    REQUIRE(rep.s33_agreeing == 100);
    REQUIRE(rep.violations.empty());
}

TEST_CASE("fuzz_canon smoke run") {
    for (auto which : {JordanTag::J1, JordanTag::J2}) {
        const auto rep = fuzz_canon(500, 87, which);
        INFO(to_string(which));
        for (const auto& note : rep.failure_notes) INFO(note);
        REQUIRE(rep.failures == 0);
        REQUIRE(rep.all_tags_hit(which));
    }
    REQUIRE_THROWS_AS(fuzz_canon(1, 1, JordanTag::Zero), std::invalid_argument);
}
