#pragma once

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "niltrace/rational.hpp"

namespace niltrace {

/// Dense n x n matrix of exact rationals, n in {2, 3}. Value type with
/// structural equality; all arithmetic is exact.
class Mat {
public:
    explicit Mat(int n) : n_(check_size(n)) {}

    Mat(int n, std::initializer_list<long> entries) : n_(check_size(n)) {
        if (static_cast<int>(entries.size()) != n * n)
            throw std::invalid_argument("matrix literal has wrong length");
        int k = 0;
        for (long v : entries) e_[k++] = rat(v);
    }

    static Mat zero(int n) { return Mat(n); }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Matrix unit E_ij (1-based indices, as in the usual notation).
    static Mat unit(int n, int i, int j) {
        Mat m(n);
        m.at(i - 1, j - 1) = 1;
        return m;
    }

    int size() const { return n_; }

    const Rat& at(int i, int j) const { return e_[i * n_ + j]; }
    Rat& at(int i, int j) { return e_[i * n_ + j]; }

    bool operator==(const Mat& o) const {
        if (n_ != o.n_) return false;
        for (int k = 0; k < n_ * n_; ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same(o);
        Mat r(n_);
        for (int k = 0; k < n_ * n_; ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same(o);
        Mat r(n_);
        for (int k = 0; k < n_ * n_; ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    Mat operator-() const {
        Mat r(n_);
        for (int k = 0; k < n_ * n_; ++k) r.e_[k] = -e_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        require_same(o);
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Rat s = 0;
                for (int k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    friend Mat operator*(const Rat& s, const Mat& m) {
        Mat r(m.n_);
        for (int k = 0; k < m.n_ * m.n_; ++k) r.e_[k] = s * m.e_[k];
        return r;
    }

    Rat trace() const {
        Rat s = 0;
        for (int i = 0; i < n_; ++i) s += at(i, i);
        return s;
    }

    Rat det() const {
        if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

private:
    static int check_size(int n) {
        if (n != 2 && n != 3) throw std::invalid_argument("matrix size must be 2 or 3");
        return n;
    }
    void require_same(const Mat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    }

    int n_;
    std::array<Rat, 9> e_{};
};

/// Second characteristic coefficient: the sum of the three principal 2x2
/// minors. Defined for size 3 only.
inline Rat sigma2(const Mat& a) {
    if (a.size() != 3) throw std::invalid_argument("sigma2 requires a 3x3 matrix");
    return (a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0)) +
           (a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0)) +
           (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1));
}

/// A^n == 0. Agrees with the characteristic-coefficient test
/// (tr = det = 0 for n = 2; tr = sigma2 = det = 0 for n = 3).
inline bool is_nilpotent(const Mat& a) {
    Mat p = a;
    for (int k = 1; k < a.size(); ++k) p = p * a;
    return p == Mat::zero(a.size());
}

inline Mat inverse(const Mat& g) {
    const Rat d = g.det();
    if (d == 0) throw std::invalid_argument("matrix is singular");
    Mat r(g.size());
    if (g.size() == 2) {
        r.at(0, 0) = g.at(1, 1) / d;
        r.at(0, 1) = -g.at(0, 1) / d;
        r.at(1, 0) = -g.at(1, 0) / d;
        r.at(1, 1) = g.at(0, 0) / d;
        return r;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adjugate: cofactor of (i,j) lands at (j,i); the cyclic index
            // choice absorbs the sign
            r.at(j, i) = (g.at(r0, c0) * g.at(r1, c1) - g.at(r0, c1) * g.at(r1, c0)) / d;
        }
    return r;
}

inline Mat conjugate(const Mat& g, const Mat& a) {
    return g * a * inverse(g);
}

/// J_1 = E_12 and J_2 = E_12 + E_23, the rank-1 and rank-2 nilpotent Jordan
/// representatives.
inline Mat jordan1() { return Mat::unit(3, 1, 2); }
inline Mat jordan2() { return Mat::unit(3, 1, 2) + Mat::unit(3, 2, 3); }

inline std::string to_string(const Mat& m) {
    std::string s = "[";
    for (int i = 0; i < m.size(); ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < m.size(); ++j) s += (j ? "," : "") + to_string(m.at(i, j));
    }
    return s + "]";
}

}  // namespace niltrace
