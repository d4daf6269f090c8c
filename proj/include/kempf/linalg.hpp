#pragma once

// Small exact dense linear algebra over the rationals: elimination, kernels,
// determinants and square solves. Everything is row-major std::vector based;
// sizes in this library are tiny (ranks <= 8, a handful of points), so the
// simple quadratic/cubic algorithms are the right tool.

#include "kempf/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kempf {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Mat mat_zero(std::size_t r, std::size_t c) { return Mat(r, Vec(c, Rat(0))); }

inline Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t = mat_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat c = mat_zero(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    if (!a.empty() && a[0].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    Vec y(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
    return c;
}

inline Mat mat_neg(const Mat& a) {
    Mat c = a;
    for (auto& row : c)
        for (auto& x : row) x = -x;
    return c;
}

inline bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

inline Mat commutator(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

/// Kronecker product: (a (x) b)[i*rb+k][j*cb+l] = a[i][j] * b[k][l].
inline Mat kronecker(const Mat& a, const Mat& b) {
    std::size_t ra = a.size(), ca = ra ? a[0].size() : 0;
    std::size_t rb = b.size(), cb = rb ? b[0].size() : 0;
    Mat k = mat_zero(ra * rb, ca * cb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t p = 0; p < rb; ++p)
                for (std::size_t q = 0; q < cb; ++q) k[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
        }
    return k;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of the right kernel {x : m x = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves a square system exactly; nullopt when singular.
inline std::optional<Vec> solve_square(Mat a, Vec b) {
    std::size_t n = a.size();
    if (n == 0) return Vec{};
    if (a[0].size() != n || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

inline std::optional<Mat> inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rat(0));
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Rat det(Mat a) {
    std::size_t n = a.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            std::swap(a[p], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return d;
}

/// Fraction-free determinant of an integer matrix (Bareiss).
inline Int int_det(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Calls fn with every k-combination of {0..n-1}, in lexicographic order.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        do {
            if (i == 0) return;
            --i;
        } while (idx[i] == i + n - k);
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace kempf
