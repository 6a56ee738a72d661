#pragma once

// Constructive decompositions of dilated lattice points: hook and reverse
// hook column extraction, column splitting for weightless polytopes, and
// the contingency-matrix correspondence for unions of rows.

#include "gtpoly/core.hpp"
#include "gtpoly/shapes.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace gtpoly {

namespace detail {

struct PlacedBox {
    int row, col, content;
};

inline std::vector<PlacedBox> placed_boxes(const SkewTableau& t) {
    std::vector<PlacedBox> out;
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
            out.push_back({static_cast<int>(r), static_cast<int>(t.shape().mu()[r] + c), t.rows()[r][c]});
    return out;
}

// Rows of a tableau from boxes, each row in column order.
inline std::vector<std::vector<int>> rows_from_boxes(std::vector<PlacedBox> boxes, std::size_t n) {
    std::sort(boxes.begin(), boxes.end(), [](const PlacedBox& a, const PlacedBox& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<std::vector<int>> rows(n);
    for (const auto& b : boxes) rows[b.row].push_back(b.content);
    return rows;
}

inline void check_k(std::int64_t k) {
    if (k < 1) throw DomainError("dilation must be positive");
}

// Shared by hooks and reverse hooks: spine is the full-height column of T,
// every content missing from it is taken from a one-box column (smallest
// column index first).
inline std::pair<SkewTableau, SkewTableau> extract_spine(const SkewTableau& t, const SkewShape& base, std::int64_t k,
                                                         int spine_col) {
    std::size_t n = base.rows();
    std::int64_t N = base.boxes();
    auto boxes = placed_boxes(t);
    std::map<int, int> column_height;
    for (const auto& b : boxes) ++column_height[b.col];
    std::vector<bool> taken(boxes.size(), false);
    std::vector<bool> present(static_cast<std::size_t>(N) + 1, false);
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].col == spine_col) {
            taken[i] = true;
            present[boxes[i].content] = true;
        }
    for (int j = 1; j <= N; ++j) {
        if (present[j]) continue;
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (!taken[i] && boxes[i].content == j && column_height[boxes[i].col] == 1 &&
                (!pick || boxes[i].col < boxes[*pick].col))
                pick = i;
        if (!pick) throw std::logic_error("no one-box column carries a missing content");
        taken[*pick] = true;
    }
    std::vector<PlacedBox> first, rest;
    for (std::size_t i = 0; i < boxes.size(); ++i) (taken[i] ? first : rest).push_back(boxes[i]);
    SkewTableau a(base.padded(n), rows_from_boxes(first, n));
    SkewTableau b(base.scaled(k - 1).padded(n), rows_from_boxes(rest, n));
    if (!a.is_standard() || !b.is_semistandard() || !(concat_tableaux(a, b) == t))
        throw std::logic_error("column extraction did not produce a valid decomposition");
    return {a, b};
}

inline void check_weight_one(const SkewTableau& t, std::int64_t k) {
    for (auto c : t.content_counts())
        if (c != k) throw DomainError("tableau does not have weight k*(1,...,1)");
}

}  // namespace detail

/// T (shape k*lambda, lambda a hook, weight k*1) = T' (+) T'' with T'
/// standard of shape lambda.
inline std::pair<SkewTableau, SkewTableau> hook_decompose(const SkewTableau& t, const SkewShape& lambda, std::int64_t k) {
    detail::check_k(k);
    auto norm = lambda.padded(lambda.rows());
    bool mu_zero = std::all_of(norm.mu().begin(), norm.mu().end(), [](std::int64_t v) { return v == 0; });
    if (!mu_zero || norm.rows() == 0 || !detail::ones_after_first(norm.lambda())) throw DomainError("shape is not a hook");
    if (!(t.shape() == lambda.scaled(k))) throw DomainError("tableau shape is not k*lambda");
    detail::check_weight_one(t, k);
    if (k == 1) return {t, SkewTableau(lambda.scaled(0).padded(lambda.rows()), {})};
    return detail::extract_spine(t, norm, k, 0);
}

/// Mirror of hook_decompose for (h^l)/((h-1)^(l-1)); the spine is the last
/// column.
inline std::pair<SkewTableau, SkewTableau> reverse_hook_decompose(const SkewTableau& t, const SkewShape& shape, std::int64_t k) {
    detail::check_k(k);
    const auto& lam = shape.lambda();
    const auto& mu = shape.mu();
    std::size_t l = shape.rows();
    bool ok = l >= 1 && lam[0] >= 1;
    for (std::size_t i = 0; ok && i < l; ++i) {
        if (lam[i] != lam[0]) ok = false;
        if (mu[i] != (i + 1 < l ? lam[0] - 1 : 0)) ok = false;
    }
    if (!ok) throw DomainError("shape is not a reverse hook");
    if (!(t.shape() == shape.scaled(k))) throw DomainError("tableau shape is not k*shape");
    detail::check_weight_one(t, k);
    if (k == 1) return {t, SkewTableau(shape.scaled(0).padded(l), {})};
    return detail::extract_spine(t, shape, k, static_cast<int>(k * lam[0] - 1));
}

/// Repeated extraction: k tableaux of the base shape whose (+)-sum is t.
inline std::vector<SkewTableau> full_decomposition(const SkewTableau& t, const SkewShape& base, std::int64_t k, bool reverse) {
    std::vector<SkewTableau> out;
    SkewTableau cur = t;
    for (std::int64_t kk = k; kk >= 2; --kk) {
        auto [a, b] = reverse ? reverse_hook_decompose(cur, base, kk) : hook_decompose(cur, base, kk);
        out.push_back(a);
        cur = b;
    }
    out.push_back(cur);
    return out;
}

/// Splits a tableau of shape k*(lambda/mu) into k tableaux of shape
/// lambda/mu by taking the j-th column of every block of k columns.
inline std::vector<SkewTableau> column_split(const SkewTableau& t, const SkewShape& base, std::int64_t k) {
    detail::check_k(k);
    if (!(t.shape() == base.scaled(k))) throw DomainError("tableau shape is not k times the base shape");
    std::size_t n = base.rows();
    std::vector<std::vector<detail::PlacedBox>> parts(static_cast<std::size_t>(k));
    for (const auto& b : detail::placed_boxes(t))
        parts[b.col % k].push_back({b.row, static_cast<int>(b.col / k), b.content});
    std::vector<SkewTableau> out;
    for (auto& p : parts) out.emplace_back(base.padded(n), detail::rows_from_boxes(p, n));
    return out;
}

// ---------------------------------------------------------------------------
// Contingency matrices
// ---------------------------------------------------------------------------

struct ContingencyMatrix {
    std::vector<std::vector<std::int64_t>> entries;  // rows of the shape x contents
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;
};

namespace detail {
inline void require_union_of_rows(const SkewShape& s) {
    auto tag = classify_shape(s).tag;
    if (tag != ShapeTag::UnionOfRows && tag != ShapeTag::EmptyShape) throw DomainError("shape is not a disjoint union of rows");
}
}  // namespace detail

/// a_ij = x^{j+1}_i - x^j_i, possibly fractional.
inline QMatrix contingency_rational(const GTPattern& p) {
    QMatrix a;
    for (std::size_t i = 0; i < p.n(); ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j + 1 < p.m(); ++j) row.push_back(p(j + 1, i) - p(j, i));
        a.push_back(std::move(row));
    }
    return a;
}

/// Contingency matrix of an integral lattice point over a union of rows.
/// Rows with no boxes are skipped.
inline ContingencyMatrix to_contingency(const GTPattern& p, const PolytopeSpec& spec) {
    detail::require_union_of_rows(spec.shape);
    if (!contains(spec, p)) throw DomainError("pattern is not in the polytope");
    if (!p.is_integral()) throw DomainError("to_contingency needs an integral pattern");
    auto q = contingency_rational(p);
    ContingencyMatrix c;
    std::size_t cols = p.m() - 1;
    c.col_sums.assign(cols, 0);
    for (std::size_t i = 0; i < spec.shape.rows(); ++i) {
        if (spec.shape.row_length(i) == 0) continue;
        std::vector<std::int64_t> row;
        std::int64_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            row.push_back(to_int64(q[i][j]));
            s += row.back();
            c.col_sums[j] += row.back();
        }
        c.entries.push_back(std::move(row));
        c.row_sums.push_back(s);
    }
    return c;
}

inline GTPattern from_contingency(const ContingencyMatrix& c, const PolytopeSpec& spec) {
    detail::require_union_of_rows(spec.shape);
    std::size_t n = spec.n(), m = spec.m();
    auto bottom = spec.bottom();
    GTPattern p(m, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        p(0, i) = bottom[i];
        bool has_boxes = i < spec.shape.rows() && spec.shape.row_length(i) > 0;
        if (has_boxes && r >= c.entries.size()) throw MalformedInput("contingency matrix has too few rows");
        for (std::size_t j = 1; j < m; ++j) {
            std::int64_t a = 0;
            if (has_boxes) {
                if (c.entries[r].size() != m - 1) throw MalformedInput("contingency row has the wrong length");
                a = c.entries[r][j - 1];
                if (a < 0) throw MalformedInput("contingency entries must be non-negative");
            }
            p(j, i) = p(j - 1, i) + a;
        }
        if (has_boxes) ++r;
    }
    if (r != c.entries.size()) throw MalformedInput("contingency matrix has too many rows");
    if (!contains(spec, p)) throw DomainError("contingency matrix does not give a point of the polytope");
    return p;
}

}  // namespace gtpoly
