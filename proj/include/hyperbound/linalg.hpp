#ifndef HYPERBOUND_LINALG_HPP
#define HYPERBOUND_LINALG_HPP

#include <optional>
#include <vector>

#include "hyperbound/gf.hpp"

namespace hyperbound {

/// Dense matrix over a field, row major. Small sizes only; everything here is
/// exact and deterministic.
using Mat = std::vector<std::vector<Fq>>;

inline Mat make_matrix(const Field& f, int rows, int cols) {
    return Mat(rows, std::vector<Fq>(cols, f.zero()));
}

inline Mat identity_matrix(const Field& f, int n) {
    Mat m = make_matrix(f, n, n);
    for (int i = 0; i < n; ++i) m[i][i] = f.one();
    return m;
}

/// In-place reduced row echelon form; returns the rank. Pivot choice is the
/// first nonzero entry scanning down each column, so the result is canonical.
inline int rref(Mat& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Fq inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Fq factor = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int rank_of(Mat m) { return rref(m); }

/// RREF basis of {x : M x = 0}, rows of the result spanning the kernel.
inline Mat kernel_basis(const Field& f, Mat m, int cols) {
    int rank = rref(m);
    m.resize(rank, std::vector<Fq>(cols, f.zero()));
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) {
                pivot_col[i] = j;
                is_pivot[j] = true;
                break;
            }
    Mat out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fq> v(cols, f.zero());
        v[free] = f.one();
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free];
        out.push_back(std::move(v));
    }
    rref(out);
    return out;
}

inline Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), std::vector<Fq>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const Field& f = *a[0][0].field();
    Mat r = make_matrix(f, static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline std::optional<Mat> inverse(const Field& f, const Mat& m) {
    int n = static_cast<int>(m.size());
    Mat aug = make_matrix(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = f.one();
    }
    if (rref(aug) < n) return std::nullopt;
    Mat inv = make_matrix(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace hyperbound

#endif
