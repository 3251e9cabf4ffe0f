#include <catch2/catch_amalgamated.hpp>

#include "niltrace/rng.hpp"
#include "niltrace/sets.hpp"

using namespace niltrace;

namespace {
Mat E(int i, int j, int n = 3) { return Mat::unit(n, i, j); }

// 2x2 matrix C = E11 + E12 - E21 - E22 from the two-letter minimality claim
Mat c2() { return Mat(2, {1, 1, -1, -1}); }
}

TEST_CASE("word basics") {
    const Word w = parse_word("1123");
    REQUIRE(w.degree() == 4);
    REQUIRE(w.multidegree(3) == std::vector<int>{2, 1, 1});
    REQUIRE(Word{2, 2, 1}.canonical() == Word{1, 2, 2});
    REQUIRE(Word{1, 1, 2, 2, 1, 2}.canonical() == Word{1, 1, 2, 2, 1, 2});
    REQUIRE(Word{1, 2, 3}.same_class(Word{3, 1, 2}));
    REQUIRE_FALSE(Word{1, 1, 2, 1, 3}.same_class(Word{1, 1, 3, 1, 2}));
    REQUIRE_THROWS_AS(parse_word(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("1a2"), std::invalid_argument);
}

TEST_CASE("eval_word examples") {
    const NilTuple t{{jordan2(), E(3, 2)}};
    REQUIRE(eval_word(t, Word{1, 2}) == 1);
    REQUIRE(eval_word(t, Word{1}) == 0);
    REQUIRE(eval_word(t, Word{2}) == 0);
    REQUIRE_THROWS_AS(eval_word(t, Word{1, 3}), std::invalid_argument);

    // single-letter words (and powers of one letter) vanish on nilpotents
    Rng rng(101);
    for (int k = 0; k < 100; ++k) {
        const NilTuple u = random_tuple(rng, 3, 3);
        for (int i = 1; i <= 3; ++i) {
            REQUIRE(eval_word(u, Word{i}) == 0);
            REQUIRE(eval_word(u, Word{i, i}) == 0);
            REQUIRE(eval_word(u, Word{i, i, i}) == 0);
        }
    }

    // three-letter separation of the triple-product word, n = 2
    const NilTuple a{{E(1, 2, 2), -E(2, 1, 2), c2()}};
    const NilTuple b{{E(1, 2, 2), c2(), -E(2, 1, 2)}};
    REQUIRE(eval_word(a, Word{1, 2, 3}) == -1);
    REQUIRE(eval_word(b, Word{1, 2, 3}) == 1);
}

TEST_CASE("builtin sets carry the expected words") {
    const auto s32 = builtin_set(SetName::S32);
    REQUIRE(s32.words == std::vector<Word>{Word{1, 2}, Word{1, 1, 2}, Word{1, 2, 2},
                                           Word{1, 1, 2, 2}, Word{1, 1, 2, 2, 1, 2}});
    REQUIRE(builtin_set(SetName::S33).words.size() == 26);
    REQUIRE(builtin_set(SetName::P33).words.size() == 39);
    REQUIRE(builtin_set(SetName::Pprime33).words.size() == 13);
    REQUIRE(builtin_set(SetName::S2, 1).words.empty());
    REQUIRE(builtin_set(SetName::S2, 3).words.size() == 4);
    REQUIRE(builtin_set(SetName::S2, 5).words.size() == 10 + 10);

    // S33 is a prefix of P33 and the remainder is Pprime33
    const auto s33 = builtin_set(SetName::S33).words;
    const auto p33 = builtin_set(SetName::P33).words;
    const auto pp = builtin_set(SetName::Pprime33).words;
    for (size_t i = 0; i < s33.size(); ++i) REQUIRE(p33[i] == s33[i]);
    for (size_t i = 0; i < pp.size(); ++i) REQUIRE(p33[26 + i] == pp[i]);

    // all 39 words are distinct as cyclic classes
    std::set<std::vector<int>> classes;
    for (const auto& w : p33) classes.insert(w.canonical().letters);
    REQUIRE(classes.size() == 39);
}

TEST_CASE("evaluate_set and conjugation invariance") {
    const auto s32 = builtin_set(SetName::S32);
    const NilTuple zero{{Mat::zero(3), Mat::zero(3)}};
    for (const Rat& v : evaluate_set(zero, s32)) REQUIRE(v == 0);

    const NilTuple t{{jordan2(), E(3, 2)}};
    REQUIRE(evaluate_set(t, s32).front() == 1);

    Rng rng(23);
    const auto s33 = builtin_set(SetName::S33);
    for (int k = 0; k < 50; ++k) {
        const NilTuple u = random_tuple(rng, 3, 3);
        const Mat g = random_unimodular(rng, 3);
        REQUIRE(evaluate_set(u, s33) == evaluate_set(conjugate(g, u), s33));
    }
}

TEST_CASE("cyclic invariance of evaluation") {
    Rng rng(29);
    for (int k = 0; k < 200; ++k) {
        const NilTuple t = random_tuple(rng, 3, 3);
        std::vector<int> ls;
        const int len = static_cast<int>(rng.uniform(1, 6));
        for (int i = 0; i < len; ++i) ls.push_back(static_cast<int>(rng.uniform(1, 3)));
        const Word w{ls};
        const Rat v = eval_word(t, w);
        for (int r = 1; r < len; ++r) REQUIRE(eval_word(t, w.rotated(r)) == v);
    }
}

TEST_CASE("separate finds the first disagreeing word in set order") {
    const auto s32 = builtin_set(SetName::S32);
    const NilTuple a{{jordan2(), E(3, 2)}};
    const NilTuple b{{jordan2(), E(1, 2)}};
    const auto w = separate(a, b, s32);
    REQUIRE(w);
    REQUIRE(*w == Word{1, 2});
    REQUIRE(eval_word(a, *w) == 1);
    REQUIRE(eval_word(b, *w) == 0);

    REQUIRE_FALSE(separate(a, a, s32));

    // the pair for tr(Y1^2 Y2): first separating word is 112 with values 0, -1
    const NilTuple a2{{jordan2(), Mat(3, {0, 1, 0, 1, 0, -1, 0, 1, 0})}};
    const NilTuple b2{{jordan2(), Mat(3, {0, 0, 0, 1, 0, 0, -1, 1, 0})}};
    const auto w2 = separate(a2, b2, s32);
    REQUIRE(w2);
    REQUIRE(*w2 == Word{1, 1, 2});
    REQUIRE(eval_word(a2, *w2) == 0);
    REQUIRE(eval_word(b2, *w2) == -1);
}

TEST_CASE("index permutation action and equivariance") {
    const Perm id = Perm::id(3);
    const Word w{1, 1, 2};
    REQUIRE(permute(w, id) == w);
    REQUIRE(permute(w, Perm{{2, 1, 3}}) == Word{2, 2, 1});

    Rng rng(31);
    for (int k = 0; k < 1000; ++k) {
        const NilTuple t = random_tuple(rng, 3, 3);
        std::vector<int> img = {1, 2, 3};
        for (int i = 2; i > 0; --i)
            std::swap(img[i], img[rng.uniform(0, i)]);
        const Perm p{img};
        std::vector<int> ls;
        const int len = static_cast<int>(rng.uniform(1, 5));
        for (int i = 0; i < len; ++i) ls.push_back(static_cast<int>(rng.uniform(1, 3)));
        const Word word{ls};
        REQUIRE(eval_word(permute(t, p), word) == eval_word(t, permute(word, p.inverse())));
    }
}

TEST_CASE("all_words_agree brute force") {
    Rng rng(37);
    const NilTuple t = random_tuple(rng, 3, 2);
    const NilTuple tc = conjugate(random_unimodular(rng, 3), t);
    REQUIRE_FALSE(all_words_agree(t, tc, 6));

    // the degree-six witness pair: agreement through length 5, separation at 6
    const NilTuple a{{jordan2(), Mat(3, {0, 1, 0, 0, 0, 0, 1, 1, 0})}};
    const NilTuple b{{jordan2(), Mat(3, {0, 0, -1, 0, 0, 1, 1, 1, 0})}};
    REQUIRE_FALSE(all_words_agree(a, b, 5));
    const auto w = all_words_agree(a, b, 6);
    REQUIRE(w);
    REQUIRE(w->degree() == 6);
    REQUIRE(*w == Word{1, 1, 2, 1, 2, 2});
    REQUIRE(eval_word(a, *w) == 0);
    REQUIRE(eval_word(b, *w) == 1);
    // the removed generator itself disagrees as well
    REQUIRE(eval_word(a, Word{1, 1, 2, 2, 1, 2}) == 1);
    REQUIRE(eval_word(b, Word{1, 1, 2, 2, 1, 2}) == 0);

    REQUIRE_THROWS_AS(all_words_agree(a, b, 9), std::invalid_argument);
    REQUIRE_THROWS_AS(all_words_agree(a, b, 0), std::invalid_argument);
}
