#pragma once

// Exact linear algebra over Z and Q: Bareiss rank and determinant,
// rational kernels, and lattice indices of integer row sets.

#include "gtpoly/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace gtpoly {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

namespace detail {

// In-place fraction-free elimination; returns the rank and the final
// leading principal value (the determinant up to sign for square input).
inline std::size_t bareiss(ZMatrix& a, std::size_t cols, Integer* det_out = nullptr) {
    std::size_t rows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (piv == rows || abs(a[i][c]) < abs(a[piv][c])) piv = i;
        }
        if (piv == rows) {
            if (det_out) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det_out) *det_out = sign * prev;
    return r;
}

inline ZMatrix clear_denominators(const QMatrix& q) {
    ZMatrix z;
    z.reserve(q.size());
    for (const auto& row : q) {
        Integer l = 1;
        for (const auto& v : row) l = lcm(l, Integer(denominator(v)));
        std::vector<Integer> zr;
        zr.reserve(row.size());
        for (const auto& v : row) zr.push_back(Integer(numerator(v)) * (l / Integer(denominator(v))));
        z.push_back(std::move(zr));
    }
    return z;
}

}  // namespace detail

inline std::size_t rank(ZMatrix a) {
    if (a.empty()) return 0;
    std::size_t cols = a[0].size();
    return detail::bareiss(a, cols);
}

inline std::size_t rank(const QMatrix& a) { return rank(detail::clear_denominators(a)); }

inline Integer determinant(ZMatrix a) {
    if (a.empty()) return 1;
    Integer d;
    detail::bareiss(a, a.size(), &d);
    return d;
}

/// Basis of {v : A v = 0} from the reduced row echelon form; one vector per
/// free column, with a 1 in that column.
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix a, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// gcd of the maximal minors of a d x N integer matrix with independent
/// rows: the index of the row lattice inside its saturation. Returns 0 if
/// the rows are dependent.
inline Integer lattice_index(const ZMatrix& rows) {
    if (rows.empty()) return 1;
    std::size_t d = rows.size(), N = rows[0].size();
    // Column operations on the rows are row operations on the transpose.
    ZMatrix t(N, std::vector<Integer>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < N; ++j) t[j][i] = rows[i][j];
    Integer index = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d; ++c) {
        while (true) {
            std::size_t best = N;
            for (std::size_t i = r; i < N; ++i)
                if (t[i][c] != 0 && (best == N || abs(t[i][c]) < abs(t[best][c]))) best = i;
            if (best == N) return 0;
            std::swap(t[best], t[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < N; ++i) {
                if (t[i][c] == 0) continue;
                Integer q = t[i][c] / t[r][c];
                for (std::size_t j = c; j < d; ++j) t[i][j] -= q * t[r][j];
                if (t[i][c] != 0) done = false;
            }
            if (done) break;
        }
        index *= abs(t[r][c]);
        ++r;
    }
    return index;
}

}  // namespace gtpoly
