#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "niltrace/tuple.hpp"

namespace niltrace {

/// tr(Y_{i1} ... Y_{ik}) as the index sequence (i1, ..., ik), 1-based.
/// Words are equivalent up to cyclic rotation; the canonical representative
/// is the lexicographically least rotation.
struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> ls) : letters(ls) { validate(); }
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) { validate(); }

    int degree() const { return static_cast<int>(letters.size()); }

    std::vector<int> multidegree(int d) const {
        std::vector<int> md(d, 0);
        for (int x : letters) {
            if (x > d) throw std::invalid_argument("word letter exceeds tuple length");
            ++md[x - 1];
        }
        return md;
    }

    Word rotated(int k) const {
        std::vector<int> v(letters.begin() + k, letters.end());
        v.insert(v.end(), letters.begin(), letters.begin() + k);
        return Word(std::move(v));
    }

    Word canonical() const {
        Word best = *this;
        for (int k = 1; k < degree(); ++k) {
            Word r = rotated(k);
            if (r.letters < best.letters) best = r;
        }
        return best;
    }

    bool same_class(const Word& o) const {
        return degree() == o.degree() && canonical().letters == o.canonical().letters;
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return letters < o.letters;
    }

private:
    void validate() const {
        if (letters.empty()) throw std::invalid_argument("empty trace word");
        for (int x : letters)
            if (x < 1) throw std::invalid_argument("word letters are 1-based indices");
    }
};

/// Digit-string syntax, e.g. "112212" for tr(Y1^2 Y2^2 Y1 Y2). Letters up
/// to 9 only, which covers every set in the library.
inline Word parse_word(const std::string& s) {
    std::vector<int> ls;
    for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad word literal: " + s);
        ls.push_back(c - '0');
    }
    return Word(std::move(ls));
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (int x : w.letters) s += static_cast<char>('0' + x);
    return s;
}

/// tr(m1 m2 ... mk), exact. All matrices must share one size.
inline Rat trace_product(const std::vector<Mat>& ms) {
    if (ms.empty()) throw std::invalid_argument("trace_product of empty list");
    Mat p = ms.front();
    for (size_t i = 1; i < ms.size(); ++i) p = p * ms[i];
    return p.trace();
}

inline Rat eval_word(const NilTuple& t, const Word& w) {
    Mat p = Mat::identity(t.dim());
    bool first = true;
    for (int x : w.letters) {
        if (x > t.count()) throw std::invalid_argument("word letter exceeds tuple length");
        p = first ? t[x - 1] : p * t[x - 1];
        first = false;
    }
    return p.trace();
}

/// Permutation of 1..d as the image list perm[i-1] = pi(i).
struct Perm {
    std::vector<int> image;

    explicit Perm(std::vector<int> img) : image(std::move(img)) {
        std::vector<bool> seen(image.size(), false);
        for (int x : image) {
            if (x < 1 || x > static_cast<int>(image.size()) || seen[x - 1])
                throw std::invalid_argument("not a permutation");
            seen[x - 1] = true;
        }
    }

    static Perm id(int d) {
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) v[i] = i + 1;
        return Perm(std::move(v));
    }

    int operator()(int i) const { return image[i - 1]; }

    Perm inverse() const {
        std::vector<int> v(image.size());
        for (size_t i = 0; i < image.size(); ++i) v[image[i] - 1] = static_cast<int>(i) + 1;
        return Perm(std::move(v));
    }
};

inline Word permute(const Word& w, const Perm& p) {
    std::vector<int> ls;
    ls.reserve(w.letters.size());
    for (int x : w.letters) ls.push_back(p(x));
    return Word(std::move(ls));
}

/// Reorders matrices so that (pt)_{pi(i)} = t_i; then
/// eval_word(permute(t, pi), w) == eval_word(t, permute(w, pi^-1)).
inline NilTuple permute(const NilTuple& t, const Perm& p) {
    const Perm q = p.inverse();
    std::vector<Mat> out;
    out.reserve(t.mats.size());
    for (int i = 1; i <= t.count(); ++i) out.push_back(t[q(i) - 1]);
    return NilTuple{std::move(out)};
}

}  // namespace niltrace
