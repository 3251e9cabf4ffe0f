#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "niltrace/matrix.hpp"

namespace niltrace {

/// Ordered d-tuple of nilpotent matrices of one common size: a point of
/// N_n^d. Construct through make() to get the nilpotency check, or wrap
/// matrices that are nilpotent by construction directly.
struct NilTuple {
    std::vector<Mat> mats;

    int dim() const { return mats.empty() ? 3 : mats.front().size(); }
    int count() const { return static_cast<int>(mats.size()); }
    const Mat& operator[](int i) const { return mats[i]; }

    bool operator==(const NilTuple& o) const { return mats == o.mats; }

    static NilTuple make(std::vector<Mat> ms) {
        if (ms.empty()) throw std::invalid_argument("empty tuple");
        const int n = ms.front().size();
        for (size_t i = 0; i < ms.size(); ++i) {
            if (ms[i].size() != n)
                throw std::invalid_argument("tuple mixes matrix sizes");
            if (!is_nilpotent(ms[i]))
                throw std::invalid_argument("matrix " + std::to_string(i + 1) + ": " +
                                            describe_failure(ms[i]));
        }
        return NilTuple{std::move(ms)};
    }

    /// Names the first failing characteristic coefficient, for diagnostics.
    static std::string describe_failure(const Mat& m) {
        if (m.trace() != 0) return "not nilpotent (trace = " + to_string(m.trace()) + ")";
        if (m.size() == 3 && sigma2(m) != 0)
            return "not nilpotent (sigma2 = " + to_string(sigma2(m)) + ")";
        if (m.det() != 0) return "not nilpotent (det = " + to_string(m.det()) + ")";
        return "not nilpotent";
    }
};

inline NilTuple conjugate(const Mat& g, const NilTuple& t) {
    std::vector<Mat> out;
    out.reserve(t.mats.size());
    const Mat gi = inverse(g);
    for (const Mat& m : t.mats) out.push_back(g * m * gi);
    return NilTuple{std::move(out)};
}

}  // namespace niltrace
