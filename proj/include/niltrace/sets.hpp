#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "niltrace/words.hpp"

namespace niltrace {

enum class SetName { S2, S32, S33, P33, Pprime33 };

inline std::string to_string(SetName n) {
    switch (n) {
        case SetName::S2: return "S2";
        case SetName::S32: return "S32";
        case SetName::S33: return "S33";
        case SetName::P33: return "P33";
        case SetName::Pprime33: return "Pprime33";
    }
    throw std::logic_error("bad set name");
}

inline std::optional<SetName> set_name_from(const std::string& s) {
    if (s == "S2") return SetName::S2;
    if (s == "S32") return SetName::S32;
    if (s == "S33") return SetName::S33;
    if (s == "P33") return SetName::P33;
    if (s == "Pprime33" || s == "P'33") return SetName::Pprime33;
    return std::nullopt;
}

/// Named, ordered word list; see builtin_set for the built-in ones.
struct InvariantSet {
    std::string name;
    int dim;  // matrix size the set is meant for
    int d;    // number of letters
    std::vector<Word> words;
};

namespace detail {

inline std::vector<Word> s33_words() {
    std::vector<Word> out;
    // per pair (i,j), i<j: ij, iij, ijj, iijj, iijjij
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        out.push_back(Word{i, j});
        out.push_back(Word{i, i, j});
        out.push_back(Word{i, j, j});
        out.push_back(Word{i, i, j, j});
        out.push_back(Word{i, i, j, j, i, j});
    }
    out.push_back(Word{1, 2, 3});
    out.push_back(Word{1, 3, 2});
    // i^2 j k over all distinct (i, {j,k})
    for (int i = 1; i <= 3; ++i) {
        int j = (i == 1) ? 2 : 1;
        int k = 6 - i - j;
        out.push_back(Word{i, i, j, k});
        out.push_back(Word{i, i, k, j});
    }
    out.push_back(Word{1, 1, 2, 1, 3});
    out.push_back(Word{2, 2, 1, 2, 3});
    out.push_back(Word{3, 3, 1, 3, 2});
    return out;
}

inline std::vector<Word> pprime33_words() {
    std::vector<Word> out;
    auto others = [](int i) {
        std::vector<int> r;
        for (int x = 1; x <= 3; ++x)
            if (x != i) r.push_back(x);
        return r;
    };
    for (int i = 1; i <= 3; ++i)
        for (int j : others(i)) {
            int k = 6 - i - j;
            out.push_back(Word{i, i, j, j, k});
        }
    for (int i = 1; i <= 3; ++i)
        for (int j : others(i)) {
            int k = 6 - i - j;
            out.push_back(Word{i, i, j, j, i, k});
        }
    out.push_back(Word{1, 1, 2, 2, 3, 3});
    return out;
}

}  // namespace detail

/// The built-in named sets. S2 takes any d >= 1 (pairs then triples, each
/// in lexicographic order); the others are fixed lists.
inline InvariantSet builtin_set(SetName name, int d = 0) {
    switch (name) {
        case SetName::S2: {
            if (d < 1) throw std::invalid_argument("S2 requires d >= 1");
            std::vector<Word> ws;
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) ws.push_back(Word{i, j});
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int k = j + 1; k <= d; ++k) ws.push_back(Word{i, j, k});
            return {"S2," + std::to_string(d), 2, d, std::move(ws)};
        }
        case SetName::S32: {
            if (d != 0 && d != 2) throw std::invalid_argument("S32 fixes d = 2");
            return {"S32", 3, 2,
                    {Word{1, 2}, Word{1, 1, 2}, Word{1, 2, 2}, Word{1, 1, 2, 2},
                     Word{1, 1, 2, 2, 1, 2}}};
        }
        case SetName::S33: {
            if (d != 0 && d != 3) throw std::invalid_argument("S33 fixes d = 3");
            return {"S33", 3, 3, detail::s33_words()};
        }
        case SetName::Pprime33: {
            if (d != 0 && d != 3) throw std::invalid_argument("Pprime33 fixes d = 3");
            return {"Pprime33", 3, 3, detail::pprime33_words()};
        }
        case SetName::P33: {
            if (d != 0 && d != 3) throw std::invalid_argument("P33 fixes d = 3");
            auto ws = detail::s33_words();
            auto extra = detail::pprime33_words();
            ws.insert(ws.end(), extra.begin(), extra.end());
            return {"P33", 3, 3, std::move(ws)};
        }
    }
    throw std::invalid_argument("unknown set name");
}

inline void require_compatible(const NilTuple& t, const InvariantSet& s) {
    if (t.dim() != s.dim) throw std::invalid_argument("tuple size does not match set");
    if (t.count() < s.d) throw std::invalid_argument("tuple has fewer matrices than set letters");
}

inline std::vector<Rat> evaluate_set(const NilTuple& t, const InvariantSet& s) {
    require_compatible(t, s);
    std::vector<Rat> out;
    out.reserve(s.words.size());
    for (const Word& w : s.words) out.push_back(eval_word(t, w));
    return out;
}

/// First word of the set (in set order) with different values on a and b.
inline std::optional<Word> separate(const NilTuple& a, const NilTuple& b,
                                    const InvariantSet& s) {
    require_compatible(a, s);
    require_compatible(b, s);
    if (a.dim() != b.dim() || a.count() != b.count())
        throw std::invalid_argument("tuples are incompatible");
    for (const Word& w : s.words)
        if (eval_word(a, w) != eval_word(b, w)) return w;
    return std::nullopt;
}

/// One representative per cyclic class of words over 1..d, in (length, lex)
/// order. Growth is d^len; the cap keeps brute force at desk scale.
inline std::vector<Word> cyclic_classes(int d, int max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    if (max_len > 8) throw std::invalid_argument("max_len capped at 8");
    std::vector<Word> out;
    std::set<std::vector<int>> seen;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> cur(len, 1);
        while (true) {
            Word w{std::vector<int>(cur)};
            auto canon = w.canonical().letters;
            if (seen.insert(canon).second && canon == cur) out.push_back(std::move(w));
            int i = len - 1;
            while (i >= 0 && cur[i] == d) cur[i--] = 1;
            if (i < 0) break;
            ++cur[i];
        }
    }
    return out;
}

/// Brute-force agreement over every cyclic word class of length <= max_len:
/// first disagreeing word, or nothing.
inline std::optional<Word> all_words_agree(const NilTuple& a, const NilTuple& b,
                                           int max_len) {
    if (a.dim() != b.dim() || a.count() != b.count())
        throw std::invalid_argument("tuples are incompatible");
    for (const Word& w : cyclic_classes(a.count(), max_len))
        if (eval_word(a, w) != eval_word(b, w)) return w;
    return std::nullopt;
}

}  // namespace niltrace
