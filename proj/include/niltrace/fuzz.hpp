#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "niltrace/canon.hpp"
#include "niltrace/rng.hpp"
#include "niltrace/sets.hpp"

namespace niltrace {

// Structured families of tuple pairs for property fuzzing of the
// separating-set theorem. Template families instantiate the free
// parameters left at the end of a proof branch, so their pairs agree on
// all of S33 by construction; the harness re-verifies that before
// counting a pair.

enum class PairFamily { Conjugate, StrictUpper, Template, Independent };

inline std::string to_string(PairFamily f) {
    switch (f) {
        case PairFamily::Conjugate: return "conjugate";
        case PairFamily::StrictUpper: return "strictupper";
        case PairFamily::Template: return "template";
        case PairFamily::Independent: return "independent";
    }
    throw std::logic_error("bad family");
}

/// Terminal proof branches that the template generator instantiates.
/// The A21_* ids are the sub-branches of the (W_I, W_I) case with both
/// first matrices J2; D_* and E_* are the branches with one first matrix
/// zero.
enum class TemplateId {
    A21_UpperZero,   // a34 = a38 = 0: two strictly upper tuples sharing J2
    A21_LowerA38,    // a34 = 0, shared a38 != 0 (first columns vanish)
    A21_LowerA34,    // a38 = 0, shared a34 != 0 (third rows vanish)
    A21_BothNonzero, // a34, a38 != 0 with the derived entry chain
    A21_Crossed,     // (a34, a38) = (0, s) against (s, 0)
    A21_Spectator,   // a37 != 0 branch, solved by the affine chain
    D_RowKilled,     // J1 vs 0; second rows vanish
    D_ColKilled,     // J1 vs 0; first columns vanish
    E_Nullcone,      // J2 vs 0; both tuples in the nullcone
};

inline const std::vector<TemplateId>& all_templates() {
    static const std::vector<TemplateId> ids = {
        TemplateId::A21_UpperZero,   TemplateId::A21_LowerA38,
        TemplateId::A21_LowerA34,    TemplateId::A21_BothNonzero,
        TemplateId::A21_Crossed,     TemplateId::A21_Spectator,
        TemplateId::D_RowKilled,     TemplateId::D_ColKilled,
        TemplateId::E_Nullcone,
    };
    return ids;
}

inline std::string to_string(TemplateId id) {
    switch (id) {
        case TemplateId::A21_UpperZero: return "a21-upperzero";
        case TemplateId::A21_LowerA38: return "a21-lower38";
        case TemplateId::A21_LowerA34: return "a21-lower34";
        case TemplateId::A21_BothNonzero: return "a21-both";
        case TemplateId::A21_Crossed: return "a21-crossed";
        case TemplateId::A21_Spectator: return "a21-spectator";
        case TemplateId::D_RowKilled: return "d-row";
        case TemplateId::D_ColKilled: return "d-col";
        case TemplateId::E_Nullcone: return "e-nullcone";
    }
    throw std::logic_error("bad template");
}

inline std::optional<TemplateId> template_from(const std::string& s) {
    for (TemplateId id : all_templates())
        if (to_string(id) == s) return id;
    return std::nullopt;
}

namespace fuzz_detail {

struct Range {
    long lo = -3;
    long hi = 3;
};

inline Mat strict_upper_of(const Rat& a, const Rat& b, const Rat& c) {
    Mat m(3);
    m.at(0, 1) = a;
    m.at(0, 2) = b;
    m.at(1, 2) = c;
    return m;
}

/// Nilpotent with zero second row: a nilpotent 2x2 block on rows/columns
/// {1,3} plus free (1,2) and (3,2) entries.
inline Mat row2_killed(Rng& rng, Range r) {
    const Mat n2 = random_nilpotent(rng, 2, r.lo, r.hi);
    Mat m(3);
    m.at(0, 0) = n2.at(0, 0);
    m.at(0, 2) = n2.at(0, 1);
    m.at(2, 0) = n2.at(1, 0);
    m.at(2, 2) = n2.at(1, 1);
    m.at(0, 1) = rng.rat_in(r.lo, r.hi);
    m.at(2, 1) = rng.rat_in(r.lo, r.hi);
    return m;
}

/// Nilpotent with zero first column; free (1,2), (1,3) entries.
inline Mat col1_killed(Rng& rng, Range r) {
    const Mat n2 = random_nilpotent(rng, 2, r.lo, r.hi);
    Mat m(3);
    m.at(1, 1) = n2.at(0, 0);
    m.at(1, 2) = n2.at(0, 1);
    m.at(2, 1) = n2.at(1, 0);
    m.at(2, 2) = n2.at(1, 1);
    m.at(0, 1) = rng.rat_in(r.lo, r.hi);
    m.at(0, 2) = rng.rat_in(r.lo, r.hi);
    return m;
}

/// Nilpotent with first column zero except a shared (3,2) = s subdiagonal:
/// [[0,x,y],[0,t,-t^2/s],[0,s,-t]].
inline Mat col1_zero_sub(Rng& rng, const Rat& s, Range r) {
    Mat m(3);
    const Rat t = rng.rat_in(r.lo, r.hi);
    m.at(0, 1) = rng.rat_in(r.lo, r.hi);
    m.at(0, 2) = rng.rat_in(r.lo, r.hi);
    m.at(1, 1) = t;
    m.at(1, 2) = -t * t / s;
    m.at(2, 1) = s;
    m.at(2, 2) = -t;
    return m;
}

/// Nilpotent with third row zero and a shared (2,1) = s subdiagonal:
/// [[t,-t^2/s,x],[s,-t,y],[0,0,0]].
inline Mat row3_zero_sub(Rng& rng, const Rat& s, Range r) {
    Mat m(3);
    const Rat t = rng.rat_in(r.lo, r.hi);
    m.at(0, 0) = t;
    m.at(0, 1) = -t * t / s;
    m.at(0, 2) = rng.rat_in(r.lo, r.hi);
    m.at(1, 0) = s;
    m.at(1, 1) = -t;
    m.at(1, 2) = rng.rat_in(r.lo, r.hi);
    return m;
}

/// Root of an affine map given by evaluation, with an exactness check; the
/// template chains use it to eliminate one entry against one agreement
/// constraint.
inline std::optional<Rat> solve_affine(const std::function<Rat(const Rat&)>& f) {
    const Rat h0 = f(Rat(0));
    const Rat c = f(Rat(1)) - h0;
    if (c == 0) return std::nullopt;
    const Rat x = -h0 / c;
    if (f(x) != 0) return std::nullopt;  // the map was not affine here
    return x;
}

struct GenFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared strictly-upper second matrices with the given third matrices.
// All rng draws happen in the callers, in declaration order, so streams are
// identical across compilers.
inline std::pair<NilTuple, NilTuple> a21_pair(const Mat& a3, const Mat& b3, const Rat& a22,
                                              const Rat& a23, const Rat& a26, const Rat& b22,
                                              const Rat& b23, const Rat& b26) {
    const Mat j2 = jordan2();
    return {NilTuple{{j2, strict_upper_of(a22, a23, a26), a3}},
            NilTuple{{j2, strict_upper_of(b22, b23, b26), b3}}};
}

inline std::pair<NilTuple, NilTuple> gen_a21_upperzero(Rng& rng, Range r) {
    const Mat j2 = jordan2();
    const Mat a2 = random_strict_upper(rng, 3, r.lo, r.hi);
    const Mat a3 = random_strict_upper(rng, 3, r.lo, r.hi);
    const Mat b2 = random_strict_upper(rng, 3, r.lo, r.hi);
    const Mat b3 = random_strict_upper(rng, 3, r.lo, r.hi);
    return {NilTuple{{j2, a2, a3}}, NilTuple{{j2, b2, b3}}};
}

inline std::pair<NilTuple, NilTuple> gen_a21_lower38(Rng& rng, Range r) {
    const Rat s = rng.rat_nonzero(r.lo, r.hi);
    const Rat a22 = rng.rat_in(r.lo, r.hi), a23 = rng.rat_in(r.lo, r.hi),
              a26 = rng.rat_in(r.lo, r.hi);
    const Mat a3 = col1_zero_sub(rng, s, r);
    const Mat b3 = col1_zero_sub(rng, s, r);
    const Rat b22 = rng.rat_in(r.lo, r.hi), b23 = rng.rat_in(r.lo, r.hi);
    return a21_pair(a3, b3, a22, a23, a26, b22, b23, a26);
}

inline std::pair<NilTuple, NilTuple> gen_a21_lower34(Rng& rng, Range r) {
    const Rat s = rng.rat_nonzero(r.lo, r.hi);
    const Rat a22 = rng.rat_in(r.lo, r.hi), a23 = rng.rat_in(r.lo, r.hi),
              a26 = rng.rat_in(r.lo, r.hi);
    const Mat a3 = row3_zero_sub(rng, s, r);
    const Mat b3 = row3_zero_sub(rng, s, r);
    const Rat b23 = rng.rat_in(r.lo, r.hi), b26 = rng.rat_in(r.lo, r.hi);
    return a21_pair(a3, b3, a22, a23, a26, a22, b23, b26);
}

inline std::pair<NilTuple, NilTuple> gen_a21_crossed(Rng& rng, Range r) {
    const Rat s = rng.rat_nonzero(r.lo, r.hi);
    const Rat a22 = rng.rat_in(r.lo, r.hi), a23 = rng.rat_in(r.lo, r.hi),
              a26 = rng.rat_in(r.lo, r.hi);
    const Mat a3 = col1_zero_sub(rng, s, r);
    const Mat b3 = row3_zero_sub(rng, s, r);
    const Rat b23 = rng.rat_in(r.lo, r.hi), b26 = rng.rat_in(r.lo, r.hi);
    // the crossed subdiagonals force b22 = a26 through the two-letter word
    return a21_pair(a3, b3, a22, a23, a26, a26, b23, b26);
}

inline std::pair<NilTuple, NilTuple> gen_a21_both(Rng& rng, Range r) {
    const Rat a22 = rng.rat_in(r.lo, r.hi), a23 = rng.rat_in(r.lo, r.hi),
              a26 = rng.rat_in(r.lo, r.hi);
    const Rat a34 = rng.rat_nonzero(r.lo, r.hi), a38 = rng.rat_nonzero(r.lo, r.hi);
    const Rat a31 = rng.rat_in(r.lo, r.hi), a35 = rng.rat_in(r.lo, r.hi),
              a36 = rng.rat_in(r.lo, r.hi);
    const Rat a39 = -a31 - a35;
    // sigma2 = 0 and det = 0 are affine in a32 and a33 in turn
    const Rat a32 = (a31 * a35 + a31 * a39 + a35 * a39 - a36 * a38) / a34;
    const Rat a33 =
        -(a31 * (a35 * a39 - a36 * a38) - a32 * (a34 * a39)) / (a34 * a38);
    Mat a3(3);
    a3.at(0, 0) = a31; a3.at(0, 1) = a32; a3.at(0, 2) = a33;
    a3.at(1, 0) = a34; a3.at(1, 1) = a35; a3.at(1, 2) = a36;
    a3.at(2, 1) = a38; a3.at(2, 2) = a39;
    if (!is_nilpotent(a3)) throw GenFail("a3");

    const Rat b31 = rng.rat_in(r.lo, r.hi);
    // T_133: a34(a31+a35) - a38 a31 = a34(b31+b35) - a38 b31
    const Rat b35 = (a34 * (a31 + a35) - a38 * a31 + a38 * b31) / a34 - b31;
    const Rat b39 = -b31 - b35;
    // T_233: a34 (a23 - b23) = (a26 - a22)(a31 - b31)
    const Rat b23 = a23 - (a26 - a22) * (a31 - b31) / a34;
    const Rat b36 = rng.rat_in(r.lo, r.hi);
    const Rat b32 = (b31 * b35 + b31 * b39 + b35 * b39 - b36 * a38) / a34;
    const Rat b33 =
        -(b31 * (b35 * b39 - b36 * a38) - b32 * (a34 * b39)) / (a34 * a38);
    Mat b3(3);
    b3.at(0, 0) = b31; b3.at(0, 1) = b32; b3.at(0, 2) = b33;
    b3.at(1, 0) = a34; b3.at(1, 1) = b35; b3.at(1, 2) = b36;
    b3.at(2, 1) = a38; b3.at(2, 2) = b39;
    if (!is_nilpotent(b3)) throw GenFail("b3");
    return a21_pair(a3, b3, a22, a23, a26, a22, b23, a26);
}

inline std::pair<NilTuple, NilTuple> gen_a21_spectator(Rng& rng, Range r) {
    const Mat j2 = jordan2();
    const Rat a22 = rng.rat_in(r.lo, r.hi), a23 = rng.rat_in(r.lo, r.hi),
              a26 = rng.rat_in(r.lo, r.hi);
    const Rat a31 = rng.rat_in(r.lo, r.hi), a34 = rng.rat_in(r.lo, r.hi),
              a36 = rng.rat_in(r.lo, r.hi);
    const Rat a38 = rng.rat_in(r.lo, r.hi);
    const Rat a37 = rng.rat_nonzero(r.lo, r.hi);
    const Rat b31 = rng.rat_in(r.lo, r.hi), b34 = rng.rat_in(r.lo, r.hi),
              b35 = rng.rat_in(r.lo, r.hi);
    const Rat b22 = a22, b26 = a26, b37 = a37;
    const Rat b38 = a34 + a38 - b34;
    const Rat a35 = ((a34 - b34) * (a38 - b34) + a37 * b35) / a37;
    const Rat a39 = -a31 - a35;
    const Rat b39 = -b31 - b35;

    // sigma2(A3) = 0 and det(A3) = 0 are jointly affine in (a32, a33)
    auto a3_of = [&](const Rat& x, const Rat& y) {
        Mat m(3);
        m.at(0, 0) = a31; m.at(0, 1) = x; m.at(0, 2) = y;
        m.at(1, 0) = a34; m.at(1, 1) = a35; m.at(1, 2) = a36;
        m.at(2, 0) = a37; m.at(2, 1) = a38; m.at(2, 2) = a39;
        return m;
    };
    const Rat s00 = sigma2(a3_of(0, 0)), s10 = sigma2(a3_of(1, 0)), s01 = sigma2(a3_of(0, 1));
    const Rat d00 = a3_of(0, 0).det(), d10 = a3_of(1, 0).det(), d01 = a3_of(0, 1).det();
    const Rat m11 = s10 - s00, m12 = s01 - s00, m21 = d10 - d00, m22 = d01 - d00;
    const Rat det2 = m11 * m22 - m12 * m21;
    if (det2 == 0) throw GenFail("singular (a32,a33) system");
    const Rat a32 = (m12 * d00 - m22 * s00) / det2;
    const Rat a33 = (m21 * s00 - m11 * d00) / det2;
    const Mat a3 = a3_of(a32, a33);
    if (!is_nilpotent(a3)) throw GenFail("a3 not nilpotent");
    const NilTuple ta{{j2, strict_upper_of(a22, a23, a26), a3}};

    auto b3_of = [&](const Rat& x32, const Rat& x33, const Rat& x36) {
        Mat m(3);
        m.at(0, 0) = b31; m.at(0, 1) = x32; m.at(0, 2) = x33;
        m.at(1, 0) = b34; m.at(1, 1) = b35; m.at(1, 2) = x36;
        m.at(2, 0) = b37; m.at(2, 1) = b38; m.at(2, 2) = b39;
        return m;
    };
    auto tb_of = [&](const Rat& x23, const Rat& x32, const Rat& x33, const Rat& x36) {
        return NilTuple{{j2, strict_upper_of(b22, x23, b26), b3_of(x32, x33, x36)}};
    };
    // explicit Rat return: a deduced type here would be a gmp expression
    // template referencing dead temporaries
    auto diff = [&](const Word& w, const NilTuple& tb) -> Rat {
        return eval_word(ta, w) - eval_word(tb, w);
    };
    const auto b23 = solve_affine(
        [&](const Rat& x) { return diff(Word{2, 3}, tb_of(x, 0, 0, 0)); });
    if (!b23) throw GenFail("b23");
    const auto b32 = solve_affine(
        [&](const Rat& x) { return diff(Word{1, 1, 3, 3, 1, 3}, tb_of(*b23, x, 0, 0)); });
    if (!b32) throw GenFail("b32");
    const auto b36 = solve_affine(
        [&](const Rat& x) { return diff(Word{1, 3, 3}, tb_of(*b23, *b32, 0, x)); });
    if (!b36) throw GenFail("b36");
    const auto b33 =
        solve_affine([&](const Rat& x) { return sigma2(b3_of(*b32, x, *b36)); });
    if (!b33) throw GenFail("b33");
    const Mat b3 = b3_of(*b32, *b33, *b36);
    if (b3.det() != 0 || !is_nilpotent(b3)) throw GenFail("b3 not nilpotent");
    return {ta, tb_of(*b23, *b32, *b33, *b36)};
}

inline std::pair<NilTuple, NilTuple> gen_d_row(Rng& rng, Range r) {
    const Mat a2 = row2_killed(rng, r), a3 = row2_killed(rng, r);
    const Mat g = random_unimodular(rng, 3, 6, r.lo, r.hi);
    return {NilTuple{{jordan1(), a2, a3}},
            NilTuple{{Mat::zero(3), conjugate(g, a2), conjugate(g, a3)}}};
}

inline std::pair<NilTuple, NilTuple> gen_d_col(Rng& rng, Range r) {
    const Mat a2 = col1_killed(rng, r), a3 = col1_killed(rng, r);
    const Mat g = random_unimodular(rng, 3, 6, r.lo, r.hi);
    return {NilTuple{{jordan1(), a2, a3}},
            NilTuple{{Mat::zero(3), conjugate(g, a2), conjugate(g, a3)}}};
}

inline std::pair<NilTuple, NilTuple> gen_e_nullcone(Rng& rng, Range r) {
    const Mat h = random_unimodular(rng, 3, 6, r.lo, r.hi);
    const Mat g = random_unimodular(rng, 3, 6, r.lo, r.hi);
    const Mat a2 = random_strict_upper(rng, 3, r.lo, r.hi);
    const Mat a3 = random_strict_upper(rng, 3, r.lo, r.hi);
    const NilTuple a{{jordan2(), a2, a3}};
    const Mat b2 = random_strict_upper(rng, 3, r.lo, r.hi);
    const Mat b3 = random_strict_upper(rng, 3, r.lo, r.hi);
    return {conjugate(h, a),
            NilTuple{{Mat::zero(3), conjugate(g, b2), conjugate(g, b3)}}};
}

}  // namespace fuzz_detail

/// One pair from the family, entries drawn from [lo, hi]; Template draws
/// may hit degenerate parameters and redraw internally (bounded).
inline std::pair<NilTuple, NilTuple> gen_pair(PairFamily family, Rng& rng,
                                              std::optional<TemplateId> templ = {},
                                              long lo = -3, long hi = 3) {
    using namespace fuzz_detail;
    const Range r{lo, hi};
    switch (family) {
        case PairFamily::Conjugate: {
            const NilTuple t = random_tuple(rng, 3, 3, lo, hi);
            return {t, conjugate(random_unimodular(rng, 3, 6, lo, hi), t)};
        }
        case PairFamily::StrictUpper: {
            auto su3 = [&] {
                const Mat m1 = random_strict_upper(rng, 3, lo, hi);
                const Mat m2 = random_strict_upper(rng, 3, lo, hi);
                const Mat m3 = random_strict_upper(rng, 3, lo, hi);
                return NilTuple{{m1, m2, m3}};
            };
            return {su3(), su3()};
        }
        case PairFamily::Independent:
            return {random_tuple(rng, 3, 3, lo, hi), random_tuple(rng, 3, 3, lo, hi)};
        case PairFamily::Template: {
            if (!templ) throw std::invalid_argument("template family needs a template id");
            for (int attempt = 0; attempt < 64; ++attempt) {
                try {
                    switch (*templ) {
                        case TemplateId::A21_UpperZero: return gen_a21_upperzero(rng, r);
                        case TemplateId::A21_LowerA38: return gen_a21_lower38(rng, r);
                        case TemplateId::A21_LowerA34: return gen_a21_lower34(rng, r);
                        case TemplateId::A21_BothNonzero: return gen_a21_both(rng, r);
                        case TemplateId::A21_Crossed: return gen_a21_crossed(rng, r);
                        case TemplateId::A21_Spectator: return gen_a21_spectator(rng, r);
                        case TemplateId::D_RowKilled: return gen_d_row(rng, r);
                        case TemplateId::D_ColKilled: return gen_d_col(rng, r);
                        case TemplateId::E_Nullcone: return gen_e_nullcone(rng, r);
                    }
                } catch (const GenFail&) {
                    continue;  // degenerate draw, retry with fresh randomness
                }
            }
            throw std::runtime_error("template generation kept hitting degenerate draws");
        }
    }
    throw std::logic_error("bad family");
}

struct Violation {
    PairFamily family;
    std::optional<TemplateId> templ;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    NilTuple a, b;
    Word word;  // P33 word separating an S33-agreeing pair
};

struct FuzzTheoremReport {
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::uint64_t s33_agreeing = 0;
    std::uint64_t template_rejected = 0;  // template pair failed re-verification
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

/// For every generated pair: if S33 does not separate, P33 must not
/// either. A violation carries full reproduction data.
inline FuzzTheoremReport fuzz_theorem(std::uint64_t trials, std::uint64_t seed,
                                      PairFamily family,
                                      std::optional<TemplateId> templ = {},
                                      long lo = -3, long hi = 3) {
    const InvariantSet s33 = builtin_set(SetName::S33);
    const InvariantSet p33 = builtin_set(SetName::P33);
    FuzzTheoremReport rep;
    rep.seed = seed;
    const std::uint64_t tag = 1000 + static_cast<std::uint64_t>(family) * 16 +
                              (templ ? 1 + static_cast<std::uint64_t>(*templ) : 0);
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = Rng::derive(seed, i, tag);
        auto [a, b] = gen_pair(family, rng, templ, lo, hi);
        ++rep.checked;
        if (separate(a, b, s33)) {
            if (family == PairFamily::Template) ++rep.template_rejected;
            continue;
        }
        ++rep.s33_agreeing;
        if (auto w = separate(a, b, p33))
            rep.violations.push_back({family, templ, seed, i, a, b, *w});
    }
    return rep;
}

struct FuzzCanonReport {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_notes;
    std::uint64_t tag_counts[9] = {0};
    bool all_tags_hit(JordanTag which) const {
        if (which == JordanTag::J1) {
            for (int i = 0; i <= 3; ++i)
                if (!tag_counts[i]) return false;
            return true;
        }
        for (int i = 4; i <= 8; ++i)
            if (!tag_counts[i]) return false;
        return true;
    }
    bool pass() const { return failures == 0; }
};

/// Random nilpotent second matrices against one stabilizer: the reduction
/// must fix the Jordan matrix exactly, land in exactly one template with
/// its side conditions, and preserve every P33 value against a random
/// third matrix.
inline FuzzCanonReport fuzz_canon(std::uint64_t trials, std::uint64_t seed, JordanTag which) {
    if (which == JordanTag::Zero) throw std::invalid_argument("stabilizer fuzz is for J1/J2");
    const Mat j = which == JordanTag::J1 ? jordan1() : jordan2();
    const InvariantSet p33 = builtin_set(SetName::P33);
    FuzzCanonReport rep;
    rep.seed = seed;
    rep.trials = trials;
    const std::uint64_t tag = which == JordanTag::J1 ? 51 : 52;
    const std::vector<CanonTag> v_tags = {CanonTag::V_I, CanonTag::V_II, CanonTag::V_III,
                                          CanonTag::V_IV};
    const std::vector<CanonTag> w_tags = {CanonTag::W_I, CanonTag::W_II, CanonTag::W_III,
                                          CanonTag::W_IV, CanonTag::W_V};
    const auto& tags = which == JordanTag::J1 ? v_tags : w_tags;

    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = Rng::derive(seed, i, tag);
        const Mat a2 = random_nilpotent(rng, 3);
        const CanonResult res =
            which == JordanTag::J1 ? stab_canon_j1(a2) : stab_canon_j2(a2);
        auto fail = [&](const std::string& why) {
            ++rep.failures;
            if (rep.failure_notes.size() < 8)
                rep.failure_notes.push_back("trial " + std::to_string(i) + ": " + why);
        };
        if (res.g.g * res.g.g_inv != Mat::identity(3)) fail("g_inv is not the inverse");
        if (res.g.apply(j) != j) fail("g does not fix the Jordan matrix");
        if (res.matrix != res.g.apply(a2)) fail("matrix is not g a2 g^-1");
        int hits = 0;
        for (CanonTag t : tags) hits += matches_template(t, res.matrix);
        if (hits != 1 || !matches_template(res.kind, res.matrix))
            fail("template match not unique/correct");
        rep.tag_counts[static_cast<int>(res.kind)] += 1;

        const Mat r3 = random_nilpotent(rng, 3);
        const NilTuple before{{j, a2, r3}};
        const NilTuple after{{j, res.matrix, res.g.apply(r3)}};
        if (evaluate_set(before, p33) != evaluate_set(after, p33))
            fail("P33 values not preserved");
    }
    return rep;
}

}  // namespace niltrace
