#include <catch2/catch_amalgamated.hpp>

#include "niltrace/witnesses.hpp"

using namespace niltrace;

namespace {
const WitnessRecord* find_record(const std::vector<WitnessRecord>& cat,
                                 const std::string& id) {
    for (const auto& r : cat)
        if (r.id == id) return &r;
    return nullptr;
}
}

TEST_CASE("catalog shape") {
    const auto cat = witness_catalog();
    int s33 = 0, s32 = 0, s2 = 0;
    for (const auto& r : cat) {
        if (r.set_name == SetName::S33) ++s33;
        if (r.set_name == SetName::S32) ++s32;
        if (r.set_name == SetName::S2) ++s2;
        for (const Mat& m : r.tuple_a.mats) REQUIRE(is_nilpotent(m));
        for (const Mat& m : r.tuple_b.mats) REQUIRE(is_nilpotent(m));
        // the target belongs to the named set
        bool found = false;
        for (const Word& w : builtin_set(r.set_name, r.d).words)
            found |= w.same_class(r.target);
        REQUIRE(found);
    }
    REQUIRE(s33 >= 26);
    REQUIRE(s32 == 5);
    REQUIRE(s2 == 5);  // claim 1, three embeddings, claim 2
}

TEST_CASE("claim 1 record verifies with values 0 and 1") {
    const auto cat = witness_catalog();
    const auto* r = find_record(cat, "S22:12");
    REQUIRE(r);
    const auto rep = verify_witness(*r);
    REQUIRE(rep.agree_ok);  // vacuous: no other words in S_{2,2}
    REQUIRE(rep.separate_ok);
    REQUIRE(eval_word(r->tuple_a, r->target) == 0);
    REQUIRE(eval_word(r->tuple_b, r->target) == 1);
}

TEST_CASE("two-matrix records carry the reported values") {
    const auto cat = witness_catalog();
    const auto* r = find_record(cat, "S32:112");
    REQUIRE(r);
    const auto rep = verify_witness(*r);
    REQUIRE(rep.agree_ok);
    REQUIRE(rep.separate_ok);
    REQUIRE(eval_word(r->tuple_a, r->target) == 0);
    REQUIRE(eval_word(r->tuple_b, r->target) == -1);

    // the 1122 record stores the displayed matrices
    const auto* r4 = find_record(cat, "S32:1122");
    REQUIRE(r4);
    REQUIRE(r4->tuple_a[1] == Mat(3, {0, -2, 1, 2, 0, 1, 2, 2, 0}));
    REQUIRE(r4->tuple_b[1] == Mat(3, {0, 0, 2, 0, 0, -1, 2, 4, 0}));
}

TEST_CASE("a corrupted record fails agreement with a named word") {
    auto cat = witness_catalog();
    auto* r = find_record(cat, "S32:1122");
    REQUIRE(r);
    WitnessRecord bad = *r;
    // swap in a different nilpotent second matrix
    bad.tuple_b = NilTuple{{bad.tuple_b[0], Mat::unit(3, 3, 2)}};
    const auto rep = verify_witness(bad);
    REQUIRE_FALSE(rep.agree_ok);
    REQUIRE(rep.failing_word);
}

TEST_CASE("verify_minimality aggregates") {
    {
        const auto rep = verify_minimality(SetName::S2, 2);
        REQUIRE(rep.pass);
        REQUIRE(rep.total == 1);
        REQUIRE(rep.witnessed == 1);
    }
    {
        const auto rep = verify_minimality(SetName::S2, 3);
        REQUIRE(rep.pass);
        REQUIRE(rep.total == 4);
        REQUIRE(rep.witnessed == 4);
    }
    {
        const auto rep = verify_minimality(SetName::S32);
        REQUIRE(rep.pass);
        REQUIRE(rep.total == 5);
        REQUIRE(rep.witnessed == 5);
    }
    {
        const auto rep = verify_minimality(SetName::S33);
        REQUIRE(rep.pass);
        REQUIRE(rep.total == 26);
        REQUIRE(rep.witnessed == 26);
        REQUIRE(rep.unwitnessed.empty());
    }
    REQUIRE_THROWS_AS(verify_minimality(SetName::P33), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_minimality(SetName::S2, 4), std::invalid_argument);
}

TEST_CASE("every S33 record individually passes against P33 minus target") {
    for (const auto& r : witness_catalog()) {
        if (r.set_name != SetName::S33) continue;
        const auto rep = verify_witness(r);
        INFO(r.id << " (" << r.source << ")");
        REQUIRE(rep.agree_ok);
        REQUIRE(rep.separate_ok);
    }
}
