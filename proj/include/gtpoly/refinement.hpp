#pragma once

// The weight-refinement order: refinement tests, connected row insertion,
// lifting non-integral vertices to finer weights, the box-refinement map on
// tableaux and the annotated refinement poset.

#include "gtpoly/core.hpp"
#include "gtpoly/polytope.hpp"
#include "gtpoly/spec.hpp"
#include "gtpoly/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace gtpoly {

/// True iff wp splits into consecutive blocks summing to the parts of w.
inline bool is_refinement(const Composition& wp, const Composition& w) {
    std::size_t i = 0;
    for (auto target : w.parts()) {
        std::int64_t s = 0;
        if (target == 0) continue;
        while (s < target && i < wp.size()) s += wp[i++];
        if (s != target) return false;
    }
    for (; i < wp.size(); ++i)
        if (wp[i] != 0) return false;
    return true;
}

/// Split of the weight entry at (0-based) position into first + second.
struct RefinementStep {
    std::size_t position = 0;
    std::int64_t first = 0;
    std::int64_t second = 0;
};

inline Composition apply_step(const Composition& w, const RefinementStep& s) {
    if (s.position >= w.size()) throw DomainError("refinement position out of range");
    if (s.first < 0 || s.second < 0 || s.first + s.second != w[s.position])
        throw DomainError("refinement split does not add up to the weight entry");
    auto parts = w.parts();
    parts[s.position] = s.first;
    parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(s.position) + 1, s.second);
    return Composition(parts);
}

// ---------------------------------------------------------------------------
// Row insertion
// ---------------------------------------------------------------------------

/// Index order used when several entries of nu may grow.
enum class Schedule { SmallestIndex, LargestIndex };

/// Pairs (i, j), 0-based, with top_i and bottom_j in one tile of the
/// two-row pattern.
inline std::vector<std::pair<int, int>> two_row_links(const std::vector<Rational>& top, const std::vector<Rational>& bottom) {
    GTPattern g({bottom, top});
    auto t = compute_tiling(g);
    std::vector<std::pair<int, int>> links;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = 0; j < bottom.size(); ++j)
            if (t.tile_id[1][i] == t.tile_id[0][j]) links.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return links;
}

/// A middle row nu with |nu| = t, top >=_int nu >=_int bottom, keeping every
/// linked (top_i, bottom_j) pair in one tile. nu starts at bottom and grows
/// by delta: strictly inside first, then sitting on bottom above the next top
/// entry, then anything else.
inline std::vector<Rational> insert_row(const std::vector<Rational>& top, const std::vector<Rational>& bottom, const Rational& t,
                                        std::optional<std::vector<std::pair<int, int>>> links = std::nullopt,
                                        Schedule schedule = Schedule::SmallestIndex) {
    std::size_t n = top.size();
    if (bottom.size() != n) throw MalformedInput("insert_row: rows differ in length");
    if (!validate_pattern(GTPattern({bottom, top}))) throw DomainError("insert_row: top does not interlace bottom");
    Rational lo = 0, hi = 0;
    for (const auto& v : bottom) lo += v;
    for (const auto& v : top) hi += v;
    if (t < lo || t > hi) throw DomainError("insert_row: t is outside [|bottom|, |top|]");
    if (!links) links = two_row_links(top, bottom);

    std::vector<Rational> all(top);
    all.insert(all.end(), bottom.begin(), bottom.end());
    all.push_back(t);
    bool any = std::any_of(all.begin(), all.end(), [](const Rational& v) { return v != 0; });
    if (!any) return bottom;
    Rational delta = rational_gcd(all);

    auto keeps_links = [&](const std::vector<Rational>& nu) {
        GTPattern g({bottom, nu, top});
        if (!validate_pattern(g)) return false;
        auto tl = compute_tiling(g);
        for (auto [i, j] : *links)
            if (tl.tile_id[2][i] != tl.tile_id[0][j]) return false;
        return true;
    };
    auto growth_class = [&](const std::vector<Rational>& nu, std::size_t i) {
        if (top[i] > nu[i] && nu[i] > bottom[i]) return 1;
        if (i + 1 < n && top[i] > nu[i] && nu[i] == bottom[i] && nu[i] > top[i + 1]) return 2;
        return 3;
    };

    std::vector<Rational> nu = bottom;
    Rational sum = lo;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (schedule == Schedule::LargestIndex) std::reverse(idx.begin(), idx.end());
    while (sum < t) {
        std::optional<std::size_t> pick;
        for (int c = 1; c <= 3 && !pick; ++c)
            for (std::size_t i : idx) {
                if (growth_class(nu, i) != c) continue;
                auto cand = nu;
                cand[i] += delta;
                if (keeps_links(cand)) {
                    pick = i;
                    break;
                }
            }
        if (!pick) throw std::logic_error("insert_row: no admissible entry to increase");
        nu[*pick] += delta;
        sum += delta;
    }
    return nu;
}

// ---------------------------------------------------------------------------
// Lifting non-integral vertices
// ---------------------------------------------------------------------------

struct LiftResult {
    PolytopeSpec spec;    // refined weight
    GTPattern inserted;   // pattern right after row insertion
    GTPattern vertex;     // certified vertex of the refined polytope
    bool adjusted = false;
};

/// Inserts a row realizing the split, then walks along the tiling kernel
/// to a vertex.
inline LiftResult lift_nonintegral_vertex(const PolytopeSpec& spec, const GTPattern& g, const RefinementStep& step,
                                          Schedule schedule = Schedule::SmallestIndex) {
    if (!spec.weight) throw DomainError("lift_nonintegral_vertex needs a weighted spec");
    if (g.is_integral() || !contains(spec, g) || !is_vertex(g, spec))
        throw DomainError("lift_nonintegral_vertex needs a non-integral vertex of the polytope");
    Composition wp = apply_step(*spec.weight, step);
    PolytopeSpec refined(spec.shape, wp, spec.k);
    std::size_t below = step.position;  // pattern rows below and above the new one
    Rational t = g.row_sum(below) + step.first * spec.k;
    auto nu = insert_row(g.row(below + 1), g.row(below), t, std::nullopt, schedule);
    auto rows = g.rows();
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(below) + 1, nu);
    GTPattern inserted(std::move(rows));
    GTPattern v = push_to_vertex(inserted, refined);
    return LiftResult{refined, inserted, v, !(v == inserted)};
}

// ---------------------------------------------------------------------------
// Box refinement on tableaux
// ---------------------------------------------------------------------------

/// Contents >= i+1 go up by one, then the k*second rightmost boxes of
/// content i become i+1 (content i is 1-based here).
inline SkewTableau box_refine_tableau(const SkewTableau& t, std::int64_t k, int content, std::int64_t first, std::int64_t second) {
    if (k < 1 || content < 1 || first < 0 || second < 0) throw DomainError("box_refine_tableau: bad parameters");
    struct Box {
        int col, row;
    };
    std::vector<Box> boxes;
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
            if (t.rows()[r][c] == content) boxes.push_back({static_cast<int>(t.shape().mu()[r] + c), static_cast<int>(r)});
    if (static_cast<std::int64_t>(boxes.size()) != k * (first + second))
        throw DomainError("box_refine_tableau: content count differs from k*(first+second)");
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.col < b.col; });
    for (std::size_t b = 1; b < boxes.size(); ++b)
        if (boxes[b].col == boxes[b - 1].col) throw DomainError("box_refine_tableau: two boxes of the content share a column");
    auto rows = t.rows();
    for (auto& r : rows)
        for (auto& v : r)
            if (v > content) ++v;
    for (std::size_t b = boxes.size() - static_cast<std::size_t>(k * second); b < boxes.size(); ++b) {
        auto [col, row] = boxes[b];
        rows[row][col - t.shape().mu()[row]] += 1;
    }
    return SkewTableau(t.shape(), std::move(rows));
}

/// Contents i+1 become i and larger contents drop by one.
inline SkewTableau box_refine_inverse(const SkewTableau& t, int content) {
    if (content < 1) throw DomainError("box_refine_inverse: bad content");
    auto rows = t.rows();
    for (auto& r : rows)
        for (auto& v : r)
            if (v > content) --v;
    SkewTableau out(t.shape(), std::move(rows));
    if (!out.is_semistandard()) throw DomainError("box_refine_inverse: result is not semistandard");
    return out;
}

// ---------------------------------------------------------------------------
// Refinement poset
// ---------------------------------------------------------------------------

struct PosetNode {
    Partition weight;
    bool empty = false;
    bool integral = false;
    std::size_t lattice_points = 0;
    std::int64_t idp_up_to = 0;  // largest k checked with IDP holding, 0 if not integral
    bool unimodular_simplex = false;

    std::string style() const {
        if (unimodular_simplex) return "solid";
        if (integral) return "dashed";
        return "dotted";
    }
};

struct RefinementPoset {
    SkewShape shape;
    std::vector<PosetNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // coarse -> fine
};

inline std::string label_of(const Partition& p) {
    std::string s;
    bool wide = std::any_of(p.parts().begin(), p.parts().end(), [](std::int64_t v) { return v > 9; });
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

/// Partitions of the box count whose polytope is non-empty, joined by
/// single-part splits. Node statuses are computed on worker threads.
inline RefinementPoset build_poset(const Partition& lambda, const Partition& mu, std::int64_t max_k_for_idp,
                                   unsigned threads = 1) {
    RefinementPoset poset;
    poset.shape = SkewShape(lambda, mu);
    std::int64_t b = poset.shape.boxes();
    auto parts = partitions_of(b);
    std::vector<std::optional<PosetNode>> slots(parts.size());
    auto eval = [&](std::size_t idx) {
        PolytopeSpec spec(poset.shape, Composition(parts[idx].parts()));
        PosetNode node;
        node.weight = parts[idx];
        auto vs = compute_vertices(spec);
        node.empty = vs.empty();
        if (node.empty) return;
        node.integral = vs.integral();
        node.lattice_points = count_lattice_points(spec);
        if (node.integral) {
            node.unimodular_simplex = is_unimodular_simplex(spec);
            node.idp_up_to = max_k_for_idp >= 2 ? (idp_check(spec, max_k_for_idp, true).holds ? max_k_for_idp : 0) : 1;
        }
        slots[idx] = node;
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < parts.size();) eval(i);
        });
    for (auto& th : pool) th.join();

    std::map<Partition, std::size_t> index;
    for (auto& s : slots)
        if (s) {
            index[s->weight] = poset.nodes.size();
            poset.nodes.push_back(*s);
        }
    for (std::size_t a = 0; a < poset.nodes.size(); ++a) {
        const auto& w = poset.nodes[a].weight.parts();
        std::set<Partition> finer;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0 && w[i] == w[i - 1]) continue;
            for (std::int64_t x = 1; x <= w[i] / 2; ++x) {
                auto v = w;
                v[i] = w[i] - x;
                v.push_back(x);
                std::sort(v.rbegin(), v.rend());
                finer.insert(Partition(v));
            }
        }
        for (const auto& f : finer) {
            auto it = index.find(f);
            if (it != index.end()) poset.edges.emplace_back(a, it->second);
        }
    }
    return poset;
}

inline std::string poset_to_dot(const RefinementPoset& p) {
    std::ostringstream out;
    out << "digraph refinement {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << label_of(p.nodes[i].weight) << "\", style=" << p.nodes[i].style() << "];\n";
    for (auto [a, b] : p.edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gtpoly
