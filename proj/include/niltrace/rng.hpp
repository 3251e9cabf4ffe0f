#pragma once

#include <cstdint>

#include "niltrace/tuple.hpp"

namespace niltrace {

/// splitmix64. Hand-rolled so that streams are identical across platforms
/// and standard-library versions (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi]. Ranges here are tiny, so the modulo bias is
    /// far below anything observable; determinism is what matters.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    long uniform_nonzero(long lo, long hi) {
        while (true) {
            long v = uniform(lo, hi);
            if (v != 0) return v;
        }
    }

    Rat rat_in(long lo, long hi) { return rat(uniform(lo, hi)); }
    Rat rat_nonzero(long lo, long hi) { return rat(uniform_nonzero(lo, hi)); }

    /// Deterministic derived stream; trial i of a run uses derive(seed, i)
    /// so results do not depend on scheduling.
    static Rng derive(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0) {
        Rng mix(seed);
        std::uint64_t s = mix.next() ^ (0xD1B54A32D192ED03ull * (index + 1)) ^
                          (0x8CB92BA72F3D8DD7ull * (tag + 1));
        return Rng(s);
    }

private:
    std::uint64_t state_;
};

/// Strictly upper triangular with entries in [lo, hi].
inline Mat random_strict_upper(Rng& rng, int n, long lo = -3, long hi = 3) {
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.at(i, j) = rng.rat_in(lo, hi);
    return m;
}

/// Random integer matrix with det +-1, as a product of elementary row
/// additions and swaps.
inline Mat random_unimodular(Rng& rng, int n, int ops = 6, long lo = -3, long hi = 3) {
    Mat g = Mat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 1));
        if (i == j) {
            // occasional row swap keeps both determinant signs reachable
            int a = i, b = (i + 1) % n;
            for (int c = 0; c < n; ++c) std::swap(g.at(a, c), g.at(b, c));
            continue;
        }
        const Rat lam = rng.rat_in(lo, hi);
        for (int c = 0; c < n; ++c) g.at(j, c) += lam * g.at(i, c);
    }
    return g;
}

/// g N g^-1 with N strictly upper triangular and g unimodular: nilpotent by
/// construction, integer entries.
inline Mat random_nilpotent(Rng& rng, int n, long lo = -3, long hi = 3) {
    const Mat nup = random_strict_upper(rng, n, lo, hi);
    const Mat g = random_unimodular(rng, n, 6, lo, hi);
    return conjugate(g, nup);
}

inline NilTuple random_tuple(Rng& rng, int n, int d, long lo = -3, long hi = 3) {
    std::vector<Mat> ms;
    ms.reserve(d);
    for (int i = 0; i < d; ++i) ms.push_back(random_nilpotent(rng, n, lo, hi));
    return NilTuple{std::move(ms)};
}

}  // namespace niltrace
