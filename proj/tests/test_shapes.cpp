#include "fixtures.hpp"
#include "oracles.hpp"
#include "gtpoly/polytope.hpp"
#include "gtpoly/shapes.hpp"

#include <gtest/gtest.h>

using namespace gtpoly;
namespace fx = testing_fixtures;

namespace {

SkewShape sk(std::vector<std::int64_t> l, std::vector<std::int64_t> m = {}) {
    auto n = l.size();
    return SkewShape(Partition(std::move(l)), Partition(std::move(m))).padded(n);
}

// Tries every row subset and column subset of big.
bool brute_contains(const SkewShape& big, const SkewShape& small) {
    std::size_t R = small.rows(), C = static_cast<std::size_t>(small.columns());
    if (small.boxes() == 0) return true;
    if (R > big.rows() || C > static_cast<std::size_t>(big.columns())) return false;
    bool found = false;
    oracle::for_each_subset(big.rows(), R, [&](const std::vector<std::size_t>& rs) {
        if (found) return;
        oracle::for_each_subset(static_cast<std::size_t>(big.columns()), C, [&](const std::vector<std::size_t>& cs) {
            if (found) return;
            for (auto cell : small.cells())
                if (!big.contains_cell(static_cast<int>(rs[cell.row]), static_cast<int>(cs[cell.col]))) return;
            found = true;
        });
    });
    return found;
}

void check_embedding(const SkewShape& big, const SkewShape& small, const Embedding& e) {
    ASSERT_EQ(e.rows.size(), small.rows());
    ASSERT_EQ(e.columns.size(), static_cast<std::size_t>(small.columns()));
    for (std::size_t i = 1; i < e.rows.size(); ++i) EXPECT_LT(e.rows[i - 1], e.rows[i]);
    for (std::size_t i = 1; i < e.columns.size(); ++i) EXPECT_LT(e.columns[i - 1], e.columns[i]);
    for (auto c : small.cells()) EXPECT_TRUE(big.contains_cell(e.rows[c.row], e.columns[c.col]));
}

bool weight_one_integral(const SkewShape& s) {
    return is_integral(PolytopeSpec(s, Composition::ones(static_cast<std::size_t>(s.boxes()))));
}

void check_nonintegral_vertex(const SkewShape& s, const GTPattern& v) {
    PolytopeSpec spec(s, Composition::ones(static_cast<std::size_t>(s.boxes())));
    EXPECT_TRUE(validate_pattern(v).ok());
    EXPECT_EQ(integral_weight(v), Composition::ones(static_cast<std::size_t>(s.boxes())));
    EXPECT_TRUE(contains(spec, v));
    EXPECT_TRUE(is_vertex(v, spec));
    EXPECT_FALSE(v.is_integral());
}

}  // namespace

TEST(Normalize, RemovesEmptyRowsAndColumns) {
    auto [a, tra] = normalize_shape(sk({3, 3, 1}, {3, 1}));
    EXPECT_EQ(a, sk({3, 1}, {1}));
    EXPECT_EQ(tra.removed_rows, std::vector<int>{0});
    EXPECT_TRUE(tra.removed_columns.empty());
    auto [b, trb] = normalize_shape(sk({4, 1}, {2}));
    EXPECT_EQ(b, sk({3, 1}, {1}));
    EXPECT_EQ(trb.removed_columns, std::vector<int>{1});
    EXPECT_TRUE(is_normalized(a));
    EXPECT_EQ(normalize_shape(a).first, a);
}

TEST(DisjointUnion, PaperExample) {
    const auto& f = fx::examples()["disjoint_union"];
    EXPECT_EQ(disjoint_union(fx::shape(f["a"]), fx::shape(f["b"])), fx::shape(f["result"]));
}

TEST(DisjointUnion, EmptyShapeIsNeutral) {
    auto a = sk({3, 2}, {1});
    EXPECT_EQ(normalize_shape(disjoint_union(a, SkewShape())).first, a);
}

TEST(DisjointUnion, WeightOneCountsSymmetric) {
    for (std::int64_t x = 1; x <= 3; ++x)
        for (std::int64_t y = 1; x + y <= 5; ++y)
            for (const auto& a : normalized_shapes(x))
                for (const auto& b : normalized_shapes(y)) {
                    auto ab = disjoint_union(a, b), ba = disjoint_union(b, a);
                    auto w = Composition::ones(static_cast<std::size_t>(x + y));
                    EXPECT_EQ(count_lattice_points(PolytopeSpec(ab, w)), count_lattice_points(PolytopeSpec(ba, w)));
                    EXPECT_EQ(classify_shape(ab).tag == ShapeTag::UnionOfRows,
                              classify_shape(a).tag == ShapeTag::UnionOfRows && classify_shape(b).tag == ShapeTag::UnionOfRows);
                }
}

TEST(Subdiagram, BasicExamples) {
    const auto& f1 = forbidden_diagrams()[0].shape;
    EXPECT_TRUE(contains_subdiagram(sk({3, 2}, {1}), f1).has_value());
    EXPECT_FALSE(contains_subdiagram(sk({4, 1, 1}), f1).has_value());
}

TEST(Subdiagram, AgreesWithSubsetOracle) {
    std::vector<SkewShape> bigs, smalls;
    for (std::int64_t b = 1; b <= 6; ++b)
        for (const auto& s : normalized_shapes(b)) bigs.push_back(s);
    for (std::int64_t b = 1; b <= 3; ++b)
        for (const auto& s : normalized_shapes(b)) smalls.push_back(s);
    for (const auto& f : forbidden_diagrams()) smalls.push_back(f.shape);
    std::size_t hits = 0;
    for (const auto& big : bigs)
        for (const auto& small : smalls) {
            auto e = contains_subdiagram(big, small);
            ASSERT_EQ(e.has_value(), brute_contains(big, small)) << ::testing::PrintToString(big.lambda());
            if (e) {
                check_embedding(big, small, *e);
                ++hits;
            }
        }
    EXPECT_GT(hits, 100u);
}

TEST(Subdiagram, ReflexiveAndTransitive) {
    std::vector<SkewShape> all;
    for (std::int64_t b = 1; b <= 4; ++b)
        for (const auto& s : normalized_shapes(b)) all.push_back(s);
    for (const auto& a : all) EXPECT_TRUE(contains_subdiagram(a, a).has_value());
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!contains_subdiagram(a, b)) continue;
            for (const auto& c : all)
                if (contains_subdiagram(b, c)) EXPECT_TRUE(contains_subdiagram(a, c).has_value());
        }
}

TEST(Classify, Examples) {
    auto c = classify_shape(sk({3, 2}, {1}));
    ASSERT_EQ(c.tag, ShapeTag::NonIntegralWitness);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->forbidden, "F1");
    EXPECT_EQ(classify_shape(sk({5, 1, 1, 1})).tag, ShapeTag::Hook);
    EXPECT_EQ(classify_shape(sk({3, 1}, {1})).tag, ShapeTag::UnionOfRows);
    EXPECT_EQ(classify_shape(sk({2, 2})).tag, ShapeTag::TwoByTwoBox);
    EXPECT_EQ(classify_shape(sk({1, 1, 1})).tag, ShapeTag::Hook);
    EXPECT_EQ(classify_shape(sk({4})).tag, ShapeTag::UnionOfRows);
    EXPECT_EQ(classify_shape(sk({3, 1, 1}, {1})).tag, ShapeTag::HookCornerMissing);
    EXPECT_EQ(classify_shape(sk({3, 3, 3}, {2, 2})).tag, ShapeTag::ReverseHook);
    EXPECT_EQ(classify_shape(sk({3, 3, 2}, {2, 2})).tag, ShapeTag::ReverseHookCornerMissing);
    EXPECT_EQ(classify_shape(SkewShape()).tag, ShapeTag::EmptyShape);
    // Normalization happens first.
    EXPECT_EQ(classify_shape(sk({5, 3, 1}, {5, 1})).tag, ShapeTag::UnionOfRows);
}

TEST(Classify, WitnessesEmbed) {
    for (std::int64_t b = 4; b <= 7; ++b)
        for (const auto& s : normalized_shapes(b)) {
            auto c = classify_shape(s);
            if (c.integral()) continue;
            ASSERT_TRUE(c.witness.has_value());
            check_embedding(s, c.witness->diagram, c.witness->embedding);
        }
}

TEST(Classify, ForbiddenDiagramsAreNonIntegral) {
    for (const auto& f : forbidden_diagrams()) {
        EXPECT_TRUE(is_normalized(f.shape)) << f.name;
        EXPECT_FALSE(weight_one_integral(f.shape)) << f.name;
        EXPECT_FALSE(classify_shape(f.shape).integral()) << f.name;
    }
}

TEST(Classify, FamilyMembersContainTheirSmallestMember) {
    // (3,2,1^k)/(2,1) for growing k.
    for (int k = 2; k <= 6; ++k) EXPECT_TRUE(contains_subdiagram(three_column_shape(k), forbidden_diagrams()[7].shape));
}

TEST(Classify, CharacterizationUpToFiveBoxes) {
    for (std::int64_t b = 1; b <= 5; ++b)
        for (const auto& s : normalized_shapes(b))
            EXPECT_EQ(classify_shape(s).integral(), weight_one_integral(s))
                << ::testing::PrintToString(s.lambda()) << "/" << ::testing::PrintToString(s.mu());
}

TEST(ThreeColumn, DisplayedPatterns) {
    for (const auto& f : fx::examples()["three_column"]) {
        int k = f["k"].get<int>();
        EXPECT_EQ(gen_three_column_vertex(k), fx::pattern(f["vertex"]));
    }
}

TEST(ThreeColumn, VerticesForSeveralK) {
    for (int k = 2; k <= 6; ++k) {
        auto v = gen_three_column_vertex(k);
        EXPECT_EQ(shape_of(v), three_column_shape(k));
        check_nonintegral_vertex(three_column_shape(k), v);
    }
    EXPECT_THROW(gen_three_column_vertex(1), DomainError);
}

TEST(SixShapes, DisplayedVertices) {
    auto got = gen_six_shape_vertices();
    const auto& f = fx::examples()["six_shapes"];
    ASSERT_EQ(got.size(), f.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].first, fx::shape(f[i]["shape"]));
        EXPECT_EQ(got[i].second, fx::pattern(f[i]["vertex"]));
        check_nonintegral_vertex(got[i].first, got[i].second);
    }
}

TEST(Extend, AddAndRemoveBoxes) {
    auto [shape, v] = gen_six_shape_vertices()[0];
    auto [s1, v1] = extend_nonintegral(shape, v, BoxMove::AddToLambda, 0);
    EXPECT_EQ(s1, sk({4, 2}, {1}));
    check_nonintegral_vertex(s1, v1);
    auto [s2, v2] = extend_nonintegral(shape, v, BoxMove::RemoveFromMu, 0);
    EXPECT_EQ(s2, sk({3, 2}));
    check_nonintegral_vertex(s2, v2);
    auto [s3, v3] = extend_nonintegral(shape, v, BoxMove::AddToLambda, 1);
    EXPECT_EQ(s3, sk({3, 3}, {1}));
    check_nonintegral_vertex(s3, v3);
}

TEST(Extend, RepeatedGrowthStaysNonIntegral) {
    for (auto [shape, v] : gen_six_shape_vertices()) {
        auto cur = std::make_pair(shape, v);
        for (int step = 0; step < 2; ++step) {
            cur = extend_nonintegral(cur.first, cur.second, BoxMove::AddToLambda, 0);
            check_nonintegral_vertex(cur.first, cur.second);
        }
    }
}

TEST(Extend, Errors) {
    auto [shape, v] = gen_six_shape_vertices()[0];
    EXPECT_THROW(extend_nonintegral(shape, v, BoxMove::AddToLambda, 2), DomainError);
    EXPECT_THROW(extend_nonintegral(shape, v, BoxMove::RemoveFromMu, 1), DomainError);
    auto integral = enumerate_lattice_points(PolytopeSpec(shape, Composition::ones(4)))[0];
    EXPECT_THROW(extend_nonintegral(shape, integral, BoxMove::AddToLambda, 0), DomainError);
}
