#pragma once

#include <optional>
#include <vector>

#include "niltrace/rational.hpp"

namespace niltrace {

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref(RMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rat d = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RMat m) {
    return static_cast<int>(rref(m).size());
}

/// One solution of M x = v if the system is consistent.
inline std::optional<RVec> solve(const RMat& m, const RVec& v) {
    if (m.empty()) return RVec{};
    const int cols = static_cast<int>(m.front().size());
    RMat aug = m;
    for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(v[i]);
    const auto pivots = rref(aug);
    for (int c : pivots)
        if (c == cols) return std::nullopt;  // pivot in the constant column
    RVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

}  // namespace niltrace
