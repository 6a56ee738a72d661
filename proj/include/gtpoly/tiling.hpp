#pragma once

// Tilings of GT-patterns, tiling matrices and the face-dimension /
// vertex certificates built on them.

#include "gtpoly/core.hpp"
#include "gtpoly/linalg.hpp"
#include "gtpoly/spec.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gtpoly {

struct Tile {
    std::vector<std::pair<int, int>> cells;  // (row, col), 0-based, row 0 = bottom
    Rational content;
    bool fixed = false;
};

struct Tiling {
    std::size_t m = 0, n = 0;
    std::vector<std::vector<int>> tile_id;  // [row][col]
    std::vector<Tile> tiles;

    std::vector<int> free_tiles() const {
        std::vector<int> out;
        for (std::size_t t = 0; t < tiles.size(); ++t)
            if (!tiles[t].fixed) out.push_back(static_cast<int>(t));
        return out;
    }
};

/// m x s counts; row r counts pattern row m-1-r (top row first).
using TilingMatrix = ZMatrix;

namespace detail {
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace detail

/// Equal entries joined along the four diagonal adjacencies. Tiles are
/// numbered by their first cell when reading the top row first, each row
/// left to right.
inline Tiling compute_tiling(const GTPattern& p) {
    std::size_t m = p.m(), n = p.n();
    auto idx = [n](std::size_t i, std::size_t j) { return static_cast<int>(i * n + j); };
    detail::Dsu dsu(m * n);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p(i, j) == p(i + 1, j)) dsu.unite(idx(i, j), idx(i + 1, j));
            if (j + 1 < n && p(i, j) == p(i + 1, j + 1)) dsu.unite(idx(i, j), idx(i + 1, j + 1));
        }
    Tiling t;
    t.m = m;
    t.n = n;
    t.tile_id.assign(m, std::vector<int>(n, -1));
    std::vector<int> root_to_tile(m * n, -1);
    for (std::size_t ii = 0; ii < m; ++ii) {
        std::size_t i = m - 1 - ii;
        for (std::size_t j = 0; j < n; ++j) {
            int r = dsu.find(idx(i, j));
            if (root_to_tile[r] < 0) {
                root_to_tile[r] = static_cast<int>(t.tiles.size());
                t.tiles.push_back(Tile{{}, p(i, j), false});
            }
            int id = root_to_tile[r];
            t.tile_id[i][j] = id;
            t.tiles[id].cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
            if (i == 0 || i + 1 == m) t.tiles[id].fixed = true;
        }
    }
    return t;
}

inline TilingMatrix tiling_matrix(const Tiling& t) {
    auto free = t.free_tiles();
    TilingMatrix mat(t.m, std::vector<Integer>(free.size(), 0));
    for (std::size_t c = 0; c < free.size(); ++c)
        for (auto [i, j] : t.tiles[free[c]].cells) mat[t.m - 1 - i][c] += 1;
    return mat;
}

inline std::size_t kernel_dimension(const TilingMatrix& mat) {
    if (mat.empty() || mat[0].empty()) return 0;
    return mat[0].size() - rank(mat);
}

inline std::vector<std::vector<Rational>> kernel_basis(const TilingMatrix& mat) {
    if (mat.empty() || mat[0].empty()) return {};
    QMatrix q;
    for (const auto& row : mat) q.emplace_back(row.begin(), row.end());
    return kernel_basis(q, mat[0].size());
}

/// Dimension of the smallest face of the polytope containing p.
inline std::size_t minimal_face_dimension(const GTPattern& p, const PolytopeSpec& spec) {
    if (!contains(spec, p)) throw DomainError("pattern is not in the polytope");
    return kernel_dimension(tiling_matrix(compute_tiling(p)));
}

inline bool is_vertex(const GTPattern& p, const PolytopeSpec& spec) { return minimal_face_dimension(p, spec) == 0; }

/// Walks along kernel directions of the tiling matrix until the pattern is
/// a vertex. Fixed tiles never move.
inline GTPattern push_to_vertex(GTPattern p, const PolytopeSpec& spec) {
    if (!contains(spec, p)) throw DomainError("pattern is not in the polytope");
    while (true) {
        Tiling t = compute_tiling(p);
        auto basis = kernel_basis(tiling_matrix(t));
        if (basis.empty()) return p;
        auto free = t.free_tiles();
        std::vector<Rational> dir(t.tiles.size(), Rational(0));
        for (std::size_t c = 0; c < free.size(); ++c) dir[free[c]] = basis[0][c];

        auto max_step = [&](int sign) {
            std::optional<Rational> best;
            auto consider = [&](std::size_t ai, std::size_t aj, std::size_t bi, std::size_t bj) {
                int ta = t.tile_id[ai][aj], tb = t.tile_id[bi][bj];
                if (ta == tb) return;
                Rational slope = sign * (dir[ta] - dir[tb]);
                if (slope >= 0) return;
                Rational step = (p(ai, aj) - p(bi, bj)) / -slope;
                if (!best || step < *best) best = step;
            };
            for (std::size_t i = 0; i + 1 < p.m(); ++i)
                for (std::size_t j = 0; j < p.n(); ++j) {
                    consider(i + 1, j, i, j);
                    if (j + 1 < p.n()) consider(i, j, i + 1, j + 1);
                }
            return best;
        };
        int sign = 1;
        auto step = max_step(1);
        if (!step || *step == 0) {
            sign = -1;
            step = max_step(-1);
        }
        if (!step || *step == 0) throw DomainError("push_to_vertex: unbounded or degenerate direction");
        for (std::size_t i = 0; i < p.m(); ++i)
            for (std::size_t j = 0; j < p.n(); ++j) p(i, j) += sign * *step * dir[t.tile_id[i][j]];
    }
}

/// True iff every r x r minor (r = rank) lies in {-1, 0, 1}.
inline bool unimodular_minor_certificate(const TilingMatrix& mat) {
    if (mat.empty() || mat[0].empty()) return true;
    std::size_t rows = mat.size(), cols = mat[0].size();
    std::size_t r = rank(mat);
    if (r == 0) return true;
    std::vector<std::size_t> rs(r), cs(r);
    auto next = [](std::vector<std::size_t>& v, std::size_t limit) {
        std::size_t k = v.size();
        for (std::size_t i = k; i-- > 0;) {
            if (v[i] < limit - k + i) {
                ++v[i];
                for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    std::iota(rs.begin(), rs.end(), 0);
    do {
        std::iota(cs.begin(), cs.end(), 0);
        do {
            ZMatrix sub(r, std::vector<Integer>(r));
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) sub[a][b] = mat[rs[a]][cs[b]];
            if (abs(determinant(sub)) > 1) return false;
        } while (next(cs, cols));
    } while (next(rs, rows));
    return true;
}

}  // namespace gtpoly
