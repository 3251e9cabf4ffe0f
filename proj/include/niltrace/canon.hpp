#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "niltrace/linalg.hpp"
#include "niltrace/tuple.hpp"

namespace niltrace {

/// Invertible change of basis with its exact inverse.
struct BasisChange {
    Mat g;
    Mat g_inv;

    static BasisChange from(const Mat& g) { return {g, inverse(g)}; }
    static BasisChange id(int n) { return {Mat::identity(n), Mat::identity(n)}; }

    Mat apply(const Mat& a) const { return g * a * g_inv; }
    NilTuple apply(const NilTuple& t) const {
        std::vector<Mat> out;
        out.reserve(t.mats.size());
        for (const Mat& m : t.mats) out.push_back(g * m * g_inv);
        return NilTuple{std::move(out)};
    }
};

enum class JordanTag { Zero, J1, J2 };

inline std::string to_string(JordanTag t) {
    switch (t) {
        case JordanTag::Zero: return "0";
        case JordanTag::J1: return "J1";
        case JordanTag::J2: return "J2";
    }
    throw std::logic_error("bad tag");
}

namespace detail {

using Vec3 = std::array<Rat, 3>;

inline Vec3 apply(const Mat& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

inline bool nonzero(const Vec3& v) {
    return v[0] != 0 || v[1] != 0 || v[2] != 0;
}

inline Mat from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat m(3);
    for (int i = 0; i < 3; ++i) {
        m.at(i, 0) = c0[i];
        m.at(i, 1) = c1[i];
        m.at(i, 2) = c2[i];
    }
    return m;
}

/// Kernel basis from RREF, free columns in ascending order.
inline std::vector<Vec3> kernel_basis(const Mat& a) {
    RMat m(3, RVec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a.at(i, j);
    const auto pivots = rref(m);
    std::vector<Vec3> out;
    for (int c = 0; c < 3; ++c) {
        bool is_pivot = false;
        for (int p : pivots) is_pivot |= (p == c);
        if (is_pivot) continue;
        Vec3 v{};
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// Jordan reduction of a nilpotent 3x3 matrix: g A g^-1 is 0, J1 or J2
/// according to rank 0/1/2. Basis choice is deterministic: the first
/// standard basis vector v with A^2 v != 0 (rank 2), or with A v != 0 plus
/// the first kernel vector completing a basis (rank 1).
inline std::pair<BasisChange, JordanTag> nilpotent_jordan(const Mat& a) {
    if (a.size() != 3) throw std::invalid_argument("jordan reduction is for 3x3");
    if (!is_nilpotent(a)) throw std::invalid_argument("matrix is not nilpotent");
    using detail::Vec3;
    if (a == Mat::zero(3)) return {BasisChange::id(3), JordanTag::Zero};

    const Mat a2 = a * a;
    const std::array<Vec3, 3> std_basis = {Vec3{Rat(1), Rat(0), Rat(0)},
                                           Vec3{Rat(0), Rat(1), Rat(0)},
                                           Vec3{Rat(0), Rat(0), Rat(1)}};
    if (a2 != Mat::zero(3)) {
        for (const Vec3& v : std_basis) {
            const Vec3 a2v = detail::apply(a2, v);
            if (!detail::nonzero(a2v)) continue;
            const Mat p = detail::from_columns(a2v, detail::apply(a, v), v);
            return {BasisChange{inverse(p), p}, JordanTag::J2};
        }
    }
    for (const Vec3& v : std_basis) {
        const Vec3 av = detail::apply(a, v);
        if (!detail::nonzero(av)) continue;
        for (const Vec3& w : detail::kernel_basis(a)) {
            const Mat p = detail::from_columns(av, v, w);
            if (p.det() == 0) continue;
            return {BasisChange{inverse(p), p}, JordanTag::J1};
        }
    }
    throw std::logic_error("jordan basis construction failed");
}

// ---------------------------------------------------------------------------
// Stabilizer canonical forms for the second matrix of a pair (J, A2).
// ---------------------------------------------------------------------------

enum class CanonTag { V_I, V_II, V_III, V_IV, W_I, W_II, W_III, W_IV, W_V };

inline std::string to_string(CanonTag t) {
    switch (t) {
        case CanonTag::V_I: return "V_I";
        case CanonTag::V_II: return "V_II";
        case CanonTag::V_III: return "V_III";
        case CanonTag::V_IV: return "V_IV";
        case CanonTag::W_I: return "W_I";
        case CanonTag::W_II: return "W_II";
        case CanonTag::W_III: return "W_III";
        case CanonTag::W_IV: return "W_IV";
        case CanonTag::W_V: return "W_V";
    }
    throw std::logic_error("bad tag");
}

struct CanonResult {
    BasisChange g;
    CanonTag kind;
    Mat matrix;  // g * input * g^-1
};

/// Zero pattern and entry relations of each template, checked exactly.
inline bool matches_template(CanonTag tag, const Mat& m) {
    auto z = [&](int i, int j) { return m.at(i, j) == 0; };
    const bool strict_upper =
        z(0, 0) && z(1, 0) && z(1, 1) && z(2, 0) && z(2, 1) && z(2, 2);
    switch (tag) {
        case CanonTag::V_I:
        case CanonTag::W_I:
            return strict_upper;
        case CanonTag::V_II:
            return z(0, 0) && z(0, 1) && z(1, 0) && z(2, 0) && m.at(2, 1) == 1 &&
                   m.at(2, 2) == -m.at(1, 1) && m.at(1, 2) == -m.at(1, 1) * m.at(1, 1);
        case CanonTag::V_III:
            return z(1, 0) && m.at(2, 0) == 1 && z(2, 1) && z(2, 2) &&
                   m.at(1, 1) == -m.at(0, 0) && m.at(0, 2) == -m.at(0, 0) * m.at(0, 0);
        case CanonTag::V_IV:
            return m.at(1, 0) != 0 && z(1, 1) && z(1, 2) && m.at(2, 2) == -m.at(0, 0);
        case CanonTag::W_II:
            return m.at(2, 1) != 0 && z(0, 0) && z(0, 1) && z(1, 0) && z(1, 1) &&
                   z(1, 2) && z(2, 0) && z(2, 2);
        case CanonTag::W_III:
            return m.at(1, 0) != 0 && z(0, 0) && z(0, 1) && z(1, 1) && z(1, 2) &&
                   z(2, 0) && z(2, 1) && z(2, 2);
        case CanonTag::W_IV:
            return m.at(1, 0) != 0 && m.at(2, 1) != 0 && z(0, 0) && z(0, 1) &&
                   z(0, 2) && z(2, 0) && m.at(2, 2) == -m.at(1, 1);
        case CanonTag::W_V:
            return m.at(2, 0) != 0 && z(0, 0) && z(1, 0) && m.at(2, 2) == -m.at(1, 1);
    }
    return false;
}

/// Reduction under the stabilizer of J1 (matrices [[g1,g2,g3],[0,g1,0],
/// [0,0,g9]]). The dispatch on (a4, a7, a8) is exhaustive and mutually
/// exclusive over nilpotent inputs; free stabilizer parameters are fixed
/// to 1 (g1, g9) or 0 (the unconstrained g2 in the V_II case).
inline CanonResult stab_canon_j1(const Mat& a) {
    if (a.size() != 3) throw std::invalid_argument("stabilizer reduction is for 3x3");
    if (!is_nilpotent(a)) throw std::invalid_argument("matrix is not nilpotent");
    const Rat a1 = a.at(0, 0), a2 = a.at(0, 1);
    const Rat a4 = a.at(1, 0), a5 = a.at(1, 1), a6 = a.at(1, 2);
    const Rat a7 = a.at(2, 0), a8 = a.at(2, 1), a9 = a.at(2, 2);

    Mat g = Mat::identity(3);
    CanonTag tag = CanonTag::V_I;
    if (a4 == 0 && a7 == 0 && a8 == 0) {
        tag = CanonTag::V_I;
    } else if (a4 == 0 && a7 == 0) {
        g.at(0, 2) = -a2 / a8;
        g.at(2, 2) = 1 / a8;
        tag = CanonTag::V_II;
    } else if (a4 == 0) {
        g.at(0, 1) = a8 / a7;
        g.at(0, 2) = a9 / a7;
        g.at(2, 2) = 1 / a7;
        tag = CanonTag::V_III;
    } else {
        g.at(0, 1) = a5 / a4;
        g.at(0, 2) = a6 / a4;
        tag = CanonTag::V_IV;
    }
    BasisChange bc = BasisChange::from(g);
    return {bc, tag, bc.apply(a)};
}

/// Reduction under the stabilizer of J2 (upper triangular Toeplitz
/// g1 I + g2 J2 + g3 J2^2, g1 fixed to 1).
inline CanonResult stab_canon_j2(const Mat& a) {
    if (a.size() != 3) throw std::invalid_argument("stabilizer reduction is for 3x3");
    if (!is_nilpotent(a)) throw std::invalid_argument("matrix is not nilpotent");
    const Rat a1 = a.at(0, 0), a2 = a.at(0, 1);
    const Rat a4 = a.at(1, 0), a5 = a.at(1, 1), a6 = a.at(1, 2);
    const Rat a7 = a.at(2, 0), a8 = a.at(2, 1), a9 = a.at(2, 2);

    Rat g2 = 0, g3 = 0;
    CanonTag tag = CanonTag::W_I;
    if (a4 == 0 && a7 == 0 && a8 == 0) {
        tag = CanonTag::W_I;
    } else if (a4 == 0 && a7 == 0) {
        g2 = -a5 / a8;
        g3 = -(a2 + (a1 * a5 - a5 * a5) / a8) / a8;
        tag = CanonTag::W_II;
    } else if (a7 == 0 && a8 == 0) {
        g2 = -a1 / a4;
        g3 = (a1 * a1 + a4 * a6 + a1 * (a5 - a9)) / (a4 * a4);
        tag = CanonTag::W_III;
    } else if (a7 == 0) {
        g2 = -a1 / a4;
        g3 = (a1 * a5 / a4 - a2) / a8;
        tag = CanonTag::W_IV;
    } else {
        g2 = -a4 / a7;
        g3 = (a4 * a4 / a7 - a1) / a7;
        tag = CanonTag::W_V;
    }
    Mat g = Mat::identity(3);
    g.at(0, 1) = g2;
    g.at(1, 2) = g2;
    g.at(0, 2) = g3;
    BasisChange bc = BasisChange::from(g);
    return {bc, tag, bc.apply(a)};
}

// ---------------------------------------------------------------------------
// Pair classification for the five-case analysis.
// ---------------------------------------------------------------------------

enum class PairCase { A, B, C, D, E, Degenerate };

inline std::string to_string(PairCase c) {
    switch (c) {
        case PairCase::A: return "a";
        case PairCase::B: return "b";
        case PairCase::C: return "c";
        case PairCase::D: return "d";
        case PairCase::E: return "e";
        case PairCase::Degenerate: return "degenerate";
    }
    throw std::logic_error("bad case");
}

struct PairClassification {
    PairCase tag = PairCase::Degenerate;
    std::vector<int> kept_indices;  // 1-based surviving indices, in order
    bool swapped = false;           // a and b exchanged to reach a listed case
    BasisChange ga{Mat::identity(3), Mat::identity(3)};
    BasisChange gb{Mat::identity(3), Mat::identity(3)};
    std::optional<NilTuple> a, b;   // normalized pair (absent when degenerate)
};

/// Drops indices where both matrices vanish, independently conjugates each
/// tuple so the first matrices are Jordan representatives, and swaps the
/// tuples if needed (keeping as `a` the tuple whose first matrix has the
/// larger rank) so the case tag is one of (a)-(e).
inline PairClassification classify_pair(const NilTuple& a, const NilTuple& b) {
    if (a.dim() != 3 || b.dim() != 3) throw std::invalid_argument("pair classification is for 3x3");
    if (a.count() != b.count()) throw std::invalid_argument("tuples differ in length");

    PairClassification out;
    std::vector<Mat> am, bm;
    for (int i = 0; i < a.count(); ++i) {
        if (a[i] == Mat::zero(3) && b[i] == Mat::zero(3)) continue;
        out.kept_indices.push_back(i + 1);
        am.push_back(a[i]);
        bm.push_back(b[i]);
    }
    if (am.empty()) return out;

    NilTuple ta{std::move(am)}, tb{std::move(bm)};
    auto [ga, taga] = nilpotent_jordan(ta[0]);
    auto [gb, tagb] = nilpotent_jordan(tb[0]);
    auto rank_of = [](JordanTag t) {
        return t == JordanTag::J2 ? 2 : (t == JordanTag::J1 ? 1 : 0);
    };
    if (rank_of(taga) < rank_of(tagb)) {
        out.swapped = true;
        std::swap(ta, tb);
        std::swap(ga, gb);
        std::swap(taga, tagb);
    }
    out.ga = ga;
    out.gb = gb;
    out.a = ga.apply(ta);
    out.b = gb.apply(tb);

    if (taga == JordanTag::J2 && tagb == JordanTag::J2) out.tag = PairCase::A;
    else if (taga == JordanTag::J2 && tagb == JordanTag::J1) out.tag = PairCase::B;
    else if (taga == JordanTag::J1 && tagb == JordanTag::J1) out.tag = PairCase::C;
    else if (taga == JordanTag::J1) out.tag = PairCase::D;
    else out.tag = PairCase::E;  // J2 vs 0
    return out;
}

}  // namespace niltrace
