#pragma once

// Skew-diagram algebra: normalization, disjoint unions, subdiagrams, the
// integral-shape classifier and explicit non-integral vertex families.

#include "gtpoly/core.hpp"
#include "gtpoly/spec.hpp"
#include "gtpoly/tiling.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gtpoly {

struct NormalizationTranscript {
    std::vector<int> removed_rows;     // original 0-based row indices
    std::vector<int> removed_columns;  // original 0-based column indices
    bool empty() const { return removed_rows.empty() && removed_columns.empty(); }
};

/// Removes empty rows and empty columns.
inline std::pair<SkewShape, NormalizationTranscript> normalize_shape(const SkewShape& s) {
    NormalizationTranscript tr;
    std::int64_t width = s.columns();
    std::vector<bool> col_used(static_cast<std::size_t>(std::max<std::int64_t>(width, 0)), false);
    for (auto c : s.cells()) col_used[c.col] = true;
    for (std::int64_t c = 0; c < width; ++c)
        if (!col_used[c]) tr.removed_columns.push_back(static_cast<int>(c));
    auto kept_before = [&](std::int64_t x) {
        std::int64_t k = 0;
        for (std::int64_t c = 0; c < x && c < width; ++c) k += col_used[c];
        return k;
    };
    std::vector<std::int64_t> lam, mu;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s.row_length(i) == 0) {
            tr.removed_rows.push_back(static_cast<int>(i));
            continue;
        }
        lam.push_back(kept_before(s.lambda()[i]));
        mu.push_back(kept_before(s.mu()[i]));
    }
    return {SkewShape(Partition(lam), Partition(mu)).padded(lam.size()), tr};
}

inline bool is_normalized(const SkewShape& s) { return normalize_shape(s).second.empty(); }

/// (nu_1 + lambda, nu) / (nu_1 + mu, tau) for a = lambda/mu, b = nu/tau.
inline SkewShape disjoint_union(const SkewShape& a, const SkewShape& b) {
    std::int64_t shift = b.lambda().empty() ? 0 : b.lambda()[0];
    std::vector<std::int64_t> lam, mu;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        lam.push_back(shift + a.lambda()[i]);
        mu.push_back(shift + a.mu()[i]);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        lam.push_back(b.lambda()[i]);
        mu.push_back(b.mu()[i]);
    }
    return SkewShape(Partition(lam), Partition(mu)).padded(lam.size());
}

struct Embedding {
    std::vector<int> rows;     // row map small -> big
    std::vector<int> columns;  // column map small -> big
};

/// Strictly increasing row and column maps sending every cell of small to
/// a cell of big.
inline std::optional<Embedding> contains_subdiagram(const SkewShape& big, const SkewShape& small) {
    std::size_t R = small.rows(), BR = big.rows();
    std::int64_t C = small.columns();
    if (small.boxes() == 0) return Embedding{};
    if (R > BR) return std::nullopt;
    std::vector<int> rmap(R);
    std::optional<Embedding> found;
    // Given a row map, columns are placed greedily left to right; every
    // column's admissible set is an interval.
    auto try_columns = [&]() -> bool {
        std::vector<int> cmap(static_cast<std::size_t>(C));
        int prev = -1;
        for (std::int64_t j = 0; j < C; ++j) {
            std::int64_t lo = prev + 1, hi = big.columns() - 1;
            for (std::size_t i = 0; i < R; ++i) {
                if (!small.contains_cell(static_cast<int>(i), static_cast<int>(j))) continue;
                lo = std::max(lo, big.mu()[rmap[i]]);
                hi = std::min(hi, big.lambda()[rmap[i]] - 1);
            }
            if (lo > hi) return false;
            cmap[j] = static_cast<int>(lo);
            prev = static_cast<int>(lo);
        }
        found = Embedding{rmap, cmap};
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i, int start) -> bool {
        if (i == R) return try_columns();
        for (int r = start; r + static_cast<int>(R - i) <= static_cast<int>(BR); ++r) {
            rmap[i] = r;
            if (self(self, i + 1, r + 1)) return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

struct ForbiddenDiagram {
    std::string name;
    SkewShape shape;
};

/// The seven finite forbidden diagrams, followed by the smallest (4-box)
/// members of the three infinite families; every larger family member
/// contains its 4-box member.
inline const std::vector<ForbiddenDiagram>& forbidden_diagrams() {
    static const std::vector<ForbiddenDiagram> list = [] {
        auto sk = [](std::vector<std::int64_t> l, std::vector<std::int64_t> m) {
            auto n = l.size();
            return SkewShape(Partition(std::move(l)), Partition(std::move(m))).padded(n);
        };
        return std::vector<ForbiddenDiagram>{
            {"F1", sk({3, 2}, {1})},
            {"F2", sk({2, 2, 1}, {1})},
            {"F3", sk({3, 2, 1}, {2})},
            {"F4", sk({3, 2, 1}, {1, 1})},
            {"F5", sk({3, 2, 2}, {2, 1})},
            {"F6", sk({3, 3, 1}, {2, 1})},
            {"F7", sk({2, 2, 1, 1}, {1, 1})},
            {"A4", sk({3, 2, 1, 1}, {2, 1})},
            {"B4", sk({3, 2, 2, 1}, {2, 1, 1})},
            {"C4", sk({3, 3, 2, 1}, {2, 2, 1})},
        };
    }();
    return list;
}

enum class ShapeTag {
    EmptyShape,
    UnionOfRows,
    TwoByTwoBox,
    Hook,
    HookCornerMissing,
    ReverseHook,
    ReverseHookCornerMissing,
    NonIntegralWitness
};

inline std::string to_string(ShapeTag t) {
    switch (t) {
        case ShapeTag::EmptyShape: return "EmptyShape";
        case ShapeTag::UnionOfRows: return "UnionOfRows";
        case ShapeTag::TwoByTwoBox: return "TwoByTwoBox";
        case ShapeTag::Hook: return "Hook";
        case ShapeTag::HookCornerMissing: return "HookCornerMissing";
        case ShapeTag::ReverseHook: return "ReverseHook";
        case ShapeTag::ReverseHookCornerMissing: return "ReverseHookCornerMissing";
        case ShapeTag::NonIntegralWitness: return "NonIntegralWitness";
    }
    return "?";
}

struct ShapeWitness {
    std::string forbidden;  // name in forbidden_diagrams()
    SkewShape diagram;
    Embedding embedding;
};

struct ShapeClass {
    ShapeTag tag = ShapeTag::EmptyShape;
    std::optional<ShapeWitness> witness;
    bool integral() const { return tag != ShapeTag::NonIntegralWitness; }
};

namespace detail {
inline bool ones_after_first(const std::vector<std::int64_t>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != 1) return false;
    return true;
}
}  // namespace detail

/// Family membership of a normalized shape (no forbidden-pattern search).
inline std::optional<ShapeTag> integral_family(const SkewShape& s) {
    const auto& lam = s.lambda();
    const auto& mu = s.mu();
    std::size_t n = s.rows();
    if (s.boxes() == 0) return ShapeTag::EmptyShape;
    std::vector<int> per_column(static_cast<std::size_t>(s.columns()), 0);
    for (auto c : s.cells()) ++per_column[c.col];
    if (std::all_of(per_column.begin(), per_column.end(), [](int c) { return c <= 1; })) return ShapeTag::UnionOfRows;
    if (n == 2 && lam[0] == 2 && lam[1] == 2 && mu[0] == 0 && mu[1] == 0) return ShapeTag::TwoByTwoBox;
    bool mu_zero = std::all_of(mu.begin(), mu.end(), [](std::int64_t v) { return v == 0; });
    if (mu_zero && detail::ones_after_first(lam)) return ShapeTag::Hook;
    bool mu_corner = mu[0] == 1 && std::all_of(mu.begin() + 1, mu.end(), [](std::int64_t v) { return v == 0; });
    if (mu_corner && n >= 2 && lam[0] >= 2 && detail::ones_after_first(lam)) return ShapeTag::HookCornerMissing;
    std::int64_t h = lam[0];
    bool lam_full = std::all_of(lam.begin(), lam.end(), [h](std::int64_t v) { return v == h; });
    bool mu_rev = mu.back() == 0 && std::all_of(mu.begin(), mu.end() - 1, [h](std::int64_t v) { return v == h - 1; });
    if (lam_full && mu_rev) return ShapeTag::ReverseHook;
    bool lam_rev_corner = n >= 2 && h >= 2 && lam.back() == h - 1 &&
                          std::all_of(lam.begin(), lam.end() - 1, [h](std::int64_t v) { return v == h; });
    if (lam_rev_corner && mu_rev) return ShapeTag::ReverseHookCornerMissing;
    return std::nullopt;
}

inline std::optional<ShapeWitness> find_forbidden(const SkewShape& normalized) {
    for (const auto& f : forbidden_diagrams())
        if (auto e = contains_subdiagram(normalized, f.shape)) return ShapeWitness{f.name, f.shape, *e};
    return std::nullopt;
}

/// Integral family of the shape, or a forbidden subdiagram witnessing
/// non-integrality. Throws std::logic_error if neither exists.
inline ShapeClass classify_shape(const SkewShape& s) {
    auto norm = normalize_shape(s).first;
    if (auto tag = integral_family(norm)) return ShapeClass{*tag, std::nullopt};
    if (auto w = find_forbidden(norm)) return ShapeClass{ShapeTag::NonIntegralWitness, w};
    throw std::logic_error("shape is in no integral family and contains no forbidden diagram");
}

/// All normalized skew shapes with exactly b boxes.
inline std::vector<SkewShape> normalized_shapes(std::int64_t b) {
    std::vector<SkewShape> out;
    if (b == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::int64_t> lam, mu;
    auto rec = [&](auto&& self, std::int64_t remaining) -> void {
        if (remaining == 0) {
            if (mu.back() != 0) return;
            SkewShape s = SkewShape(Partition(lam), Partition(mu)).padded(lam.size());
            if (is_normalized(s)) out.push_back(s);
            return;
        }
        std::int64_t lmax = lam.empty() ? b : lam.back();
        std::int64_t mmax = mu.empty() ? b : mu.back();
        for (std::int64_t l = 1; l <= lmax; ++l)
            for (std::int64_t m = 0; m <= std::min(mmax, l - 1); ++m) {
                if (l - m > remaining) continue;
                lam.push_back(l);
                mu.push_back(m);
                self(self, remaining - (l - m));
                lam.pop_back();
                mu.pop_back();
            }
    };
    rec(rec, b);
    return out;
}

// ---------------------------------------------------------------------------
// Explicit non-integral vertices
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<Rational> qrow(std::initializer_list<const char*> xs) {
    std::vector<Rational> r;
    for (auto x : xs) r.push_back(parse_rational(x));
    return r;
}
}  // namespace detail

/// Weight-one vertex of (3,2,1^k)/(2,1), k >= 2 (k + 2 boxes).
inline GTPattern gen_three_column_vertex(int k) {
    if (k < 2) throw DomainError("gen_three_column_vertex needs k >= 2");
    std::size_t n = static_cast<std::size_t>(k) + 2;
    const Rational half(1, 2);
    std::vector<std::vector<Rational>> top_first;
    std::vector<Rational> r(n, Rational(1));
    r[0] = 3;
    r[1] = 2;
    top_first.push_back(r);
    r.assign(n, Rational(1));
    r[0] = 3;
    r[1] = Rational(3, 2);
    r[n - 1] = half;
    top_first.push_back(r);
    for (std::size_t t = 2; t + 2 <= n; ++t) {
        r.assign(n, Rational(0));
        r[0] = 3;
        std::size_t ones = n - 1 - t;
        for (std::size_t j = 1; j <= ones; ++j) r[j] = 1;
        r[ones + 1] = half;
        r[ones + 2] = half;
        top_first.push_back(r);
    }
    r.assign(n, Rational(0));
    r[0] = Rational(5, 2);
    r[1] = 1;
    r[2] = half;
    top_first.push_back(r);
    r.assign(n, Rational(0));
    r[0] = 2;
    r[1] = 1;
    top_first.push_back(r);
    std::reverse(top_first.begin(), top_first.end());
    return GTPattern(std::move(top_first));
}

inline SkewShape three_column_shape(int k) {
    std::vector<std::int64_t> lam{3, 2};
    for (int i = 0; i < k; ++i) lam.push_back(1);
    return SkewShape(Partition(lam), Partition{2, 1}).padded(lam.size());
}

/// The five half-integral weight-one vertices of the small forbidden shapes.
inline std::vector<std::pair<SkewShape, GTPattern>> gen_six_shape_vertices() {
    using detail::qrow;
    auto sk = [](std::vector<std::int64_t> l, std::vector<std::int64_t> m) {
        auto n = l.size();
        return SkewShape(Partition(std::move(l)), Partition(std::move(m))).padded(n);
    };
    return {
        {sk({3, 2}, {1}),
         GTPattern({qrow({"1", "0"}), qrow({"3/2", "1/2"}), qrow({"3/2", "3/2"}), qrow({"5/2", "3/2"}), qrow({"3", "2"})})},
        {sk({2, 2, 1}, {1}),
         GTPattern({qrow({"1", "0", "0"}), qrow({"3/2", "1/2", "0"}), qrow({"2", "1/2", "1/2"}), qrow({"2", "3/2", "1/2"}),
                    qrow({"2", "2", "1"})})},
        {sk({3, 2, 1}, {2}),
         GTPattern({qrow({"2", "0", "0"}), qrow({"5/2", "1/2", "0"}), qrow({"3", "1/2", "1/2"}), qrow({"3", "3/2", "1/2"}),
                    qrow({"3", "2", "1"})})},
        {sk({3, 2, 2}, {2, 1}),
         GTPattern({qrow({"2", "1", "0"}), qrow({"2", "3/2", "1/2"}), qrow({"2", "3/2", "3/2"}), qrow({"5/2", "2", "3/2"}),
                    qrow({"3", "2", "2"})})},
        {sk({2, 2, 1, 1}, {1, 1}),
         GTPattern({qrow({"1", "1", "0", "0"}), qrow({"3/2", "1", "1/2", "0"}), qrow({"2", "1", "1/2", "1/2"}),
                    qrow({"2", "3/2", "1", "1/2"}), qrow({"2", "2", "1", "1"})})},
    };
}

enum class BoxMove { AddToLambda, RemoveFromMu };

/// Grows a non-integral weight-one vertex by one box: a new top row with
/// lambda_row + 1, or a new bottom row with mu_row - 1.
inline std::pair<SkewShape, GTPattern> extend_nonintegral(const SkewShape& shape, const GTPattern& vertex, BoxMove move,
                                                          std::size_t row) {
    PolytopeSpec spec(shape, Composition::ones(static_cast<std::size_t>(shape.boxes())));
    if (vertex.is_integral() || !contains(spec, vertex) || !is_vertex(vertex, spec))
        throw DomainError("extend_nonintegral needs a non-integral vertex of the weight-one polytope");
    std::size_t n = vertex.n();
    if (row >= n) throw DomainError("row index out of range");
    auto lam = shape.padded(n).lambda();
    auto mu = shape.padded(n).mu();
    auto rows = vertex.rows();
    if (move == BoxMove::AddToLambda) {
        if (row > 0 && lam[row - 1] < lam[row] + 1) throw DomainError("adding this box does not give a partition");
        lam[row] += 1;
        rows.emplace_back(lam.begin(), lam.end());
    } else {
        if (mu[row] == 0 || (row + 1 < n && mu[row + 1] > mu[row] - 1))
            throw DomainError("removing this box does not give a partition");
        mu[row] -= 1;
        rows.insert(rows.begin(), std::vector<Rational>(mu.begin(), mu.end()));
    }
    return {SkewShape(Partition(lam), Partition(mu)).padded(n), GTPattern(std::move(rows))};
}

}  // namespace gtpoly
