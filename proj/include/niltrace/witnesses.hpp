#pragma once

#include <optional>
#include <string>
#include <vector>

#include "niltrace/sets.hpp"

namespace niltrace {

/// A pair of tuples agreeing on a set minus one word and disagreeing on
/// that word: the certificate that the word cannot be dropped.
struct WitnessRecord {
    std::string id;
    SetName set_name;
    int d;  // tuple length of the record
    Word target;
    NilTuple tuple_a;
    NilTuple tuple_b;
    std::string source;
};

struct WitnessReport {
    bool agree_ok = false;
    bool separate_ok = false;
    std::optional<Word> failing_word;  // first word of set\{target} that disagrees
};

namespace detail {

inline Mat e2(int i, int j) { return Mat::unit(2, i, j); }
inline Mat e3(int i, int j) { return Mat::unit(3, i, j); }

// Base pairs of the S_{3,2} minimality proof, one per removed word. The
// pair for tr(Y1 Y2^2) is the 1<->2 relabeling of the tr(Y1^2 Y2) pair.
struct S32Pair {
    Word target;
    Mat a1, a2, b1, b2;
};

inline std::vector<S32Pair> s32_pairs() {
    const Mat j2 = jordan2();
    const Mat m112a(3, {0, 1, 0, 1, 0, -1, 0, 1, 0});
    const Mat m112b(3, {0, 0, 0, 1, 0, 0, -1, 1, 0});
    const Mat m1122a(3, {0, -2, 1, 2, 0, 1, 2, 2, 0});
    const Mat m1122b(3, {0, 0, 2, 0, 0, -1, 2, 4, 0});
    const Mat m6a(3, {0, 1, 0, 0, 0, 0, 1, 1, 0});
    const Mat m6b(3, {0, 0, -1, 0, 0, 1, 1, 1, 0});
    return {
        {Word{1, 2}, j2, e3(3, 2), j2, e3(1, 2)},
        {Word{1, 1, 2}, j2, m112a, j2, m112b},
        {Word{1, 2, 2}, m112a, j2, m112b, j2},
        {Word{1, 1, 2, 2}, j2, m1122a, j2, m1122b},
        {Word{1, 1, 2, 2, 1, 2}, j2, m6a, j2, m6b},
    };
}

inline NilTuple embed3(const Mat& first, const Mat& second, int i, int j) {
    const int k = 6 - i - j;
    std::vector<Mat> ms(3, Mat::zero(3));
    ms[i - 1] = first;
    ms[j - 1] = second;
    ms[k - 1] = Mat::zero(3);
    return NilTuple{std::move(ms)};
}

}  // namespace detail

/// Every explicit witness pair of the minimality proofs, plus the
/// symmetry-expanded records: the two-letter pairs embedded into d = 3 with
/// a zero third matrix under all index substitutions, and the three-letter
/// pairs under the index permutations that carry the proven cases to the
/// remaining ones. Every f in S_{3,3} ends up with a record against
/// P_{3,3} \ {f}.
inline std::vector<WitnessRecord> witness_catalog() {
    using detail::e2;
    using detail::e3;
    std::vector<WitnessRecord> out;

    // --- n = 2 ---
    const Mat c2(2, {1, 1, -1, -1});
    const NilTuple cl1a{{e2(1, 2), e2(1, 2)}};
    const NilTuple cl1b{{e2(1, 2), e2(2, 1)}};
    out.push_back({"S22:12", SetName::S2, 2, Word{1, 2}, cl1a, cl1b, "claim 1"});
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        const int k = 6 - i - j;
        std::vector<Mat> am(3, Mat::zero(2)), bm(3, Mat::zero(2));
        am[i - 1] = e2(1, 2);
        am[j - 1] = e2(1, 2);
        bm[i - 1] = e2(1, 2);
        bm[j - 1] = e2(2, 1);
        am[k - 1] = bm[k - 1] = Mat::zero(2);
        out.push_back({"S23:" + to_string(Word{i, j}), SetName::S2, 3, Word{i, j},
                       NilTuple{am}, NilTuple{bm}, "claim 1, embedded"});
    }
    out.push_back({"S23:123", SetName::S2, 3, Word{1, 2, 3},
                   NilTuple{{e2(1, 2), -e2(2, 1), c2}},
                   NilTuple{{e2(1, 2), c2, -e2(2, 1)}}, "claim 2"});

    // --- S_{3,2} ---
    for (const auto& p : detail::s32_pairs())
        out.push_back({"S32:" + to_string(p.target), SetName::S32, 2, p.target,
                       NilTuple{{p.a1, p.a2}}, NilTuple{{p.b1, p.b2}},
                       "two-matrix minimality pair"});

    // --- S_{3,3}, two-letter targets: embedded S_{3,2} pairs ---
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        for (const auto& p : detail::s32_pairs()) {
            std::vector<int> ls;
            for (int x : p.target.letters) ls.push_back(x == 1 ? i : j);
            Word target{ls};
            out.push_back({"S33:" + to_string(target), SetName::S33, 3, target,
                           detail::embed3(p.a1, p.a2, i, j),
                           detail::embed3(p.b1, p.b2, i, j),
                           "two-matrix pair embedded with zero third matrix"});
        }

    // --- S_{3,3}, three-letter targets: base pairs and their relabelings ---
    const Mat j2 = jordan2();
    struct Base {
        Word target;
        NilTuple a, b;
        std::vector<std::vector<int>> perms;  // images of (1,2,3)
    };
    const std::vector<Base> bases = {
        {Word{1, 2, 3},
         NilTuple{{e3(3, 1), e3(1, 2) + e3(3, 2), e3(2, 3)}},
         NilTuple{{Mat::zero(3), e3(1, 2), e3(2, 1)}},
         {{1, 2, 3}, {1, 3, 2}}},
        {Word{1, 1, 2, 3},
         NilTuple{{e3(2, 1) + e3(3, 2), e3(1, 2), e3(2, 3)}},
         NilTuple{{e3(1, 3) + e3(2, 1), e3(1, 2), j2}},
         {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}},
        {Word{1, 1, 2, 1, 3},
         NilTuple{{e3(2, 1) + e3(3, 2), e3(1, 3), e3(2, 3)}},
         NilTuple{{e3(2, 3) + e3(3, 1), e3(1, 2), e3(1, 3)}},
         {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}},
    };
    for (const auto& base : bases)
        for (const auto& img : base.perms) {
            const Perm p{img};
            const Word target = permute(base.target, p).canonical();
            const bool is_base = img == std::vector<int>{1, 2, 3};
            out.push_back({"S33:" + to_string(target), SetName::S33, 3, target,
                           permute(base.a, p), permute(base.b, p),
                           is_base ? "three-letter minimality pair"
                                   : "three-letter pair, relabeled"});
        }
    return out;
}

/// The verification set for a record: S33 targets are checked against the
/// stronger P33 \ {f}; S2/S32 targets against their own set minus f.
inline InvariantSet verification_set(const WitnessRecord& r) {
    switch (r.set_name) {
        case SetName::S2: return builtin_set(SetName::S2, r.d);
        case SetName::S32: return builtin_set(SetName::S32);
        default: return builtin_set(SetName::P33);
    }
}

inline WitnessReport verify_witness(const WitnessRecord& r) {
    for (const Mat& m : r.tuple_a.mats)
        if (!is_nilpotent(m)) throw std::invalid_argument("record " + r.id + ": tuple_a not nilpotent");
    for (const Mat& m : r.tuple_b.mats)
        if (!is_nilpotent(m)) throw std::invalid_argument("record " + r.id + ": tuple_b not nilpotent");

    WitnessReport rep;
    rep.agree_ok = true;
    const InvariantSet set = verification_set(r);
    for (const Word& w : set.words) {
        if (w.same_class(r.target)) continue;
        if (eval_word(r.tuple_a, w) != eval_word(r.tuple_b, w)) {
            rep.agree_ok = false;
            if (!rep.failing_word) rep.failing_word = w;
        }
    }
    rep.separate_ok = eval_word(r.tuple_a, r.target) != eval_word(r.tuple_b, r.target);
    return rep;
}

struct MinimalityReport {
    SetName set_name;
    int d;
    int total = 0;     // elements of the set
    int witnessed = 0; // elements with at least one passing record
    bool pass = false;
    std::vector<std::pair<std::string, WitnessReport>> records;
    std::vector<Word> unwitnessed;
};

/// Every element of the named set must carry a passing witness record.
/// For S33 the records certify non-separation of P33 \ {f}, the stronger
/// statement.
inline MinimalityReport verify_minimality(SetName name, int d = 0) {
    if (name != SetName::S2 && name != SetName::S32 && name != SetName::S33)
        throw std::invalid_argument("minimality is certified for S2, S32, S33");
    if (name == SetName::S2 && (d < 2 || d > 3))
        throw std::invalid_argument("S2 minimality records cover d in {2, 3}");

    MinimalityReport rep;
    rep.set_name = name;
    rep.d = (name == SetName::S2) ? d : (name == SetName::S32 ? 2 : 3);
    const InvariantSet set = builtin_set(name, rep.d);
    rep.total = static_cast<int>(set.words.size());

    const auto catalog = witness_catalog();
    for (const Word& target : set.words) {
        bool ok = false;
        for (const auto& r : catalog) {
            if (r.set_name != name || r.d != rep.d || !r.target.same_class(target)) continue;
            auto wr = verify_witness(r);
            rep.records.emplace_back(r.id, wr);
            ok = ok || (wr.agree_ok && wr.separate_ok);
        }
        if (ok)
            ++rep.witnessed;
        else
            rep.unwitnessed.push_back(target);
    }
    rep.pass = rep.witnessed == rep.total;
    return rep;
}

}  // namespace niltrace
