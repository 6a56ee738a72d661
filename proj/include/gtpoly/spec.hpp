#pragma once

// PolytopeSpec: the skew shape, optional weight and dilation that fix a
// GT-polytope, and the membership test.

#include "gtpoly/core.hpp"

#include <optional>

namespace gtpoly {

struct PolytopeSpec {
    SkewShape shape;
    std::optional<Composition> weight;  // absent: weightless polytope
    std::int64_t k = 1;
    std::size_t weightless_rows = 0;    // row count m when weight is absent

    PolytopeSpec() = default;
    PolytopeSpec(SkewShape s, Composition w, std::int64_t dilation = 1)
        : shape(std::move(s)), weight(std::move(w)), k(dilation) {
        if (k < 1) throw MalformedInput("dilation must be positive");
    }
    static PolytopeSpec weightless(SkewShape s, std::size_t m, std::int64_t dilation = 1) {
        if (m < 1) throw MalformedInput("weightless polytope needs m >= 1");
        PolytopeSpec p;
        p.shape = std::move(s);
        p.k = dilation;
        p.weightless_rows = m;
        if (p.k < 1) throw MalformedInput("dilation must be positive");
        return p;
    }

    std::size_t m() const { return weight ? weight->size() + 1 : weightless_rows; }
    std::size_t n() const { return std::max<std::size_t>(shape.rows(), 1); }

    /// k*lambda and k*mu padded to n entries.
    std::vector<std::int64_t> top() const { return shape.scaled(k).padded(n()).lambda(); }
    std::vector<std::int64_t> bottom() const { return shape.scaled(k).padded(n()).mu(); }
    std::vector<std::int64_t> scaled_weight() const { return weight ? weight->scaled(k).parts() : std::vector<std::int64_t>{}; }

    /// Required row sums from the bottom, when a weight is present.
    std::vector<std::int64_t> row_sums() const {
        std::vector<std::int64_t> sums;
        std::int64_t s = 0;
        for (auto v : bottom()) s += v;
        sums.push_back(s);
        for (auto w : scaled_weight()) sums.push_back(s += w);
        return sums;
    }

    /// Weight sums to the box count (otherwise the polytope is empty).
    bool balanced() const { return !weight || weight->sum() == shape.boxes(); }

    PolytopeSpec dilated(std::int64_t factor) const {
        PolytopeSpec p = *this;
        p.k *= factor;
        return p;
    }
};

/// Membership in the polytope. Patterns may carry extra zero columns on the
/// right. A pattern with the wrong number of rows is simply not a member;
/// fewer columns than the shape has rows is a dimension mismatch.
inline bool contains(const PolytopeSpec& spec, const GTPattern& p) {
    if (p.n() < spec.shape.rows()) throw MalformedInput("pattern has fewer columns than the shape has rows");
    if (p.m() != spec.m()) return false;
    if (!validate_pattern(p)) return false;
    auto top = spec.shape.scaled(spec.k).padded(p.n()).lambda();
    auto bottom = spec.shape.scaled(spec.k).padded(p.n()).mu();
    for (std::size_t j = 0; j < p.n(); ++j)
        if (p.top()[j] != top[j] || p.bottom()[j] != bottom[j]) return false;
    if (spec.weight) {
        auto w = weight_of(p);
        auto sw = spec.scaled_weight();
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != sw[i]) return false;
    }
    return true;
}

}  // namespace gtpoly
