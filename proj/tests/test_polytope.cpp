#include "fixtures.hpp"
#include "oracles.hpp"
#include "gtpoly/polytope.hpp"
#include "gtpoly/shapes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gtpoly;
namespace fx = testing_fixtures;

namespace {

// Fills the boxes one at a time in reading order; counts semistandard
// fillings with entries in 1..max_entry and the given content (if any).
std::size_t ssyt_count(const SkewShape& s, int max_entry, const std::vector<std::int64_t>* content = nullptr) {
    auto cells = s.cells();
    std::map<std::pair<std::int64_t, std::int64_t>, int> val;
    std::vector<std::int64_t> used(max_entry + 1, 0);
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            if (content) {
                for (int c = 1; c <= max_entry; ++c)
                    if (used[c] != (*content)[c - 1]) return;
            }
            ++count;
            return;
        }
        auto [r, c] = std::pair<std::int64_t, std::int64_t>{cells[i].row, cells[i].col};
        for (int v = 1; v <= max_entry; ++v) {
            auto left = val.find({r, c - 1});
            if (left != val.end() && left->second > v) continue;
            auto up = val.find({r - 1, c});
            if (up != val.end() && up->second >= v) continue;
            if (content && used[v] >= (*content)[v - 1]) continue;
            val[{r, c}] = v;
            ++used[v];
            rec(i + 1);
            --used[v];
            val.erase({r, c});
        }
    };
    rec(0);
    return count;
}

std::size_t ssyt_count(const PolytopeSpec& spec) {
    auto w = spec.scaled_weight();
    return ssyt_count(spec.shape.scaled(spec.k), static_cast<int>(w.size()), &w);
}

// d-th finite difference of k -> #(kP) at k = 0..d.
Integer ehrhart_volume(const PolytopeSpec& spec, int d) {
    std::vector<Integer> vals;
    for (int k = 0; k <= d; ++k) vals.emplace_back(k == 0 ? 1 : count_lattice_points(spec.dilated(k)));
    for (int round = 0; round < d; ++round)
        for (std::size_t i = 0; i + 1 < vals.size() - round; ++i) vals[i] = vals[i + 1] - vals[i];
    return vals[0];
}

std::vector<PolytopeSpec> small_specs() {
    return {PolytopeSpec(SkewShape(Partition{3, 2}, Partition{1}), Composition{1, 1, 1, 1}),
            PolytopeSpec(SkewShape(Partition{2, 2}), Composition{1, 1, 1, 1}),
            PolytopeSpec(SkewShape(Partition{3, 1}), Composition{2, 1, 1}),
            PolytopeSpec(SkewShape(Partition{3, 2, 1}, Partition{1}), Composition{2, 1, 2}),
            PolytopeSpec(SkewShape(Partition{4, 2}), Composition{1, 2, 2, 1}),
            PolytopeSpec(SkewShape(Partition{2, 2, 1}, Partition{1}), Composition{1, 1, 1, 1}),
            PolytopeSpec(SkewShape(Partition{3, 3}), Composition{2, 2, 2})};
}

}  // namespace

TEST(LatticePoints, StandardTableauxOf431) {
    PolytopeSpec spec(SkewShape(Partition{4, 3, 1}), Composition::ones(8));
    EXPECT_EQ(count_lattice_points(spec), 70u);
    EXPECT_EQ(enumerate_lattice_points(spec).size(), 70u);
}

TEST(LatticePoints, SmallSkew) {
    EXPECT_EQ(count_lattice_points(PolytopeSpec(SkewShape(Partition{2, 2}, Partition{1}), Composition{1, 1, 1})), 2u);
}

TEST(LatticePoints, AgreeWithFillingOracle) {
    for (const auto& spec : small_specs())
        for (std::int64_t k : {1, 2}) {
            auto s = spec.dilated(k);
            EXPECT_EQ(count_lattice_points(s), ssyt_count(s));
        }
    for (const auto& w : partitions_of(6)) {
        PolytopeSpec s(SkewShape(Partition{4, 3, 2}, Partition{2, 1}), Composition(w.parts()));
        EXPECT_EQ(count_lattice_points(s), ssyt_count(s));
    }
}

TEST(LatticePoints, AllPointsAreMembers) {
    for (const auto& spec : small_specs())
        for (const auto& p : enumerate_lattice_points(spec.dilated(2))) EXPECT_TRUE(contains(spec.dilated(2), p));
}

TEST(LatticePoints, WeightlessMatchesBoundedFillings) {
    SkewShape s(Partition{3, 2}, Partition{1});
    for (std::size_t m = 1; m <= 4; ++m)
        EXPECT_EQ(weightless_points(s, m, 3).size(), ssyt_count(s, static_cast<int>(m - 1)));
    EXPECT_THROW(weightless_points(s, 3, 2), DomainError);
}

TEST(LatticePoints, MinkowskiSumsLandInDilation) {
    std::mt19937 rng(99);
    for (const auto& spec : small_specs()) {
        auto pts = enumerate_lattice_points(spec);
        for (int t = 0; t < 20 && !pts.empty(); ++t) {
            const auto& a = pts[rng() % pts.size()];
            const auto& b = pts[rng() % pts.size()];
            EXPECT_TRUE(contains(spec.dilated(2), add_patterns(a, b)));
        }
    }
}

TEST(Vertices, AgreeWithBruteForce) {
    for (const auto& spec : small_specs()) {
        auto brute = oracle::brute_force_vertices(spec);
        auto walk = enumerate_vertices(spec);
        auto global = compute_vertices_global(spec).vertices;
        EXPECT_EQ(std::set<GTPattern>(walk.begin(), walk.end()), brute);
        EXPECT_EQ(std::set<GTPattern>(global.begin(), global.end()), brute);
        EXPECT_EQ(walk.size(), brute.size());
        for (const auto& v : walk) EXPECT_TRUE(is_vertex(v, spec));
    }
}

TEST(Vertices, TwoByTwoBoxIsASegment) {
    PolytopeSpec spec(SkewShape(Partition{2, 2}), Composition{1, 1, 1, 1});
    auto vs = compute_vertices(spec);
    EXPECT_EQ(vs.vertices.size(), 2u);
    EXPECT_EQ(polytope_dimension(vs), 1);
}

TEST(Vertices, ContainsSixShapeVertex) {
    auto f = fx::examples()["six_shapes"][0];
    PolytopeSpec spec(fx::shape(f["shape"]), Composition{1, 1, 1, 1});
    auto vs = enumerate_vertices(spec);
    EXPECT_NE(std::find(vs.begin(), vs.end(), fx::pattern(f["vertex"])), vs.end());
    EXPECT_FALSE(is_integral(spec));
}

TEST(Vertices, PointPolytope) {
    PolytopeSpec spec(SkewShape(Partition{3, 1}), Composition{3, 1});
    auto vs = compute_vertices(spec);
    ASSERT_EQ(vs.vertices.size(), 1u);
    EXPECT_EQ(polytope_dimension(vs), 0);
    EXPECT_TRUE(vs.integral());
}

TEST(Vertices, EmptyPolytope) {
    PolytopeSpec spec(SkewShape(Partition{4, 3, 1}), Composition{8});
    EXPECT_TRUE(is_empty(spec));
    EXPECT_FALSE(is_integral(spec));
    EXPECT_EQ(polytope_dimension(compute_vertices(spec)), -1);
    EXPECT_TRUE(is_empty(PolytopeSpec(SkewShape(Partition{2}), Composition{1, 2})));
}

TEST(Vertices, IntegralityPair) {
    for (const auto& f : fx::examples()["integrality_pair"]) {
        PolytopeSpec spec(fx::shape(f["shape"]), fx::composition(f["weight"]));
        EXPECT_EQ(is_integral(spec), f["integral"].get<bool>());
        auto brute = oracle::brute_force_vertices(spec);
        bool all_int = std::all_of(brute.begin(), brute.end(), [](const GTPattern& p) { return p.is_integral(); });
        EXPECT_EQ(all_int, f["integral"].get<bool>());
    }
}

TEST(Dimension, MatchesLatticePointSpanWhenIntegral) {
    for (const auto& spec : small_specs()) {
        auto vs = compute_vertices(spec);
        if (!vs.integral()) continue;
        auto pts = enumerate_lattice_points(spec);
        oracle::QRows diffs;
        for (const auto& p : pts) {
            std::vector<Rational> d;
            for (std::size_t i = 0; i < p.m(); ++i)
                for (std::size_t j = 0; j < p.n(); ++j) d.push_back(p(i, j) - pts[0](i, j));
            diffs.push_back(d);
        }
        EXPECT_EQ(polytope_dimension(vs), static_cast<int>(oracle::rank(diffs)));
    }
}

TEST(Idp, AgreesWithPairwiseSumsAtTwo) {
    for (const auto& spec : small_specs()) {
        if (!is_integral(spec)) continue;
        auto base = enumerate_lattice_points(spec);
        std::set<GTPattern> sums;
        for (const auto& a : base)
            for (const auto& b : base) sums.insert(add_patterns(a, b));
        auto twice = enumerate_lattice_points(spec.dilated(2));
        bool holds = std::all_of(twice.begin(), twice.end(), [&](const GTPattern& p) { return sums.count(p) > 0; });
        auto v = idp_check(spec, 2);
        EXPECT_EQ(v.holds, holds);
        if (v.holds) EXPECT_EQ(v.checked_up_to, 2);
    }
}

TEST(Idp, Errors) {
    auto pair = fx::examples()["integrality_pair"];
    PolytopeSpec bad(fx::shape(pair[1]["shape"]), fx::composition(pair[1]["weight"]));
    EXPECT_THROW(idp_check(bad, 2), DomainError);
    PolytopeSpec good(fx::shape(pair[0]["shape"]), fx::composition(pair[0]["weight"]));
    EXPECT_THROW(idp_check(good.dilated(2), 2), MalformedInput);
    EXPECT_TRUE(idp_check(good, 3).holds);
}

TEST(Triangulation, VolumesMatchEhrhartDifferences) {
    for (const auto& spec : small_specs()) {
        if (!is_integral(spec)) continue;
        auto tri = pulling_triangulation(spec);
        ASSERT_TRUE(tri.complete);
        Integer total = 0;
        for (const auto& s : tri.simplices) {
            EXPECT_EQ(s.vertices.size(), static_cast<std::size_t>(tri.dimension + 1));
            total += s.normalized_volume;
        }
        EXPECT_EQ(total, ehrhart_volume(spec, tri.dimension));
    }
}

TEST(Triangulation, VolumeIndependentOfOrder) {
    PolytopeSpec spec(SkewShape(Partition{4, 2}), Composition{1, 2, 2, 1});
    ASSERT_TRUE(is_integral(spec));
    auto base = pulling_triangulation(spec);
    Integer want = 0;
    for (const auto& s : base.simplices) want += s.normalized_volume;
    std::vector<std::size_t> order(base.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(4);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        auto tri = pulling_triangulation(spec, order);
        Integer got = 0;
        for (const auto& s : tri.simplices) got += s.normalized_volume;
        EXPECT_EQ(got, want);
    }
    EXPECT_THROW(pulling_triangulation(spec, {0, 0}), MalformedInput);
}

TEST(Triangulation, BudgetStopsEarly) {
    PolytopeSpec spec(SkewShape(Partition{4, 2}), Composition{1, 2, 2, 1});
    TriangulationBudget b;
    b.max_simplices = 1;
    auto tri = pulling_triangulation(spec, {}, b);
    ASSERT_GT(pulling_triangulation(spec).simplices.size(), 1u);
    EXPECT_FALSE(tri.complete);
}

TEST(UnimodularSimplex, AgreesWithEhrhart) {
    Partition lam{4, 3, 1};
    for (const auto& w : partitions_of(8)) {
        PolytopeSpec spec{SkewShape(lam), Composition(w.parts())};
        auto vs = compute_vertices(spec);
        bool want = false;
        if (vs.integral()) {
            int d = polytope_dimension(vs);
            want = static_cast<int>(vs.vertices.size()) == d + 1 && ehrhart_volume(spec, d) == 1;
        }
        EXPECT_EQ(is_unimodular_simplex(spec), want) << ::testing::PrintToString(w.parts());
    }
    EXPECT_TRUE(is_unimodular_simplex(PolytopeSpec(SkewShape(lam), Composition{4, 2, 2})));
    EXPECT_FALSE(is_unimodular_simplex(PolytopeSpec(SkewShape(lam), Composition{2, 2, 2, 2})));
}
