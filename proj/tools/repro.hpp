#pragma once

// Replays the stored worked examples and compares against fixtures.

#include "gtpoly/decomposition.hpp"
#include "gtpoly/io.hpp"
#include "gtpoly/polytope.hpp"
#include "gtpoly/refinement.hpp"
#include "gtpoly/shapes.hpp"
#include "gtpoly/tiling.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace repro {

using gtpoly::io::Json;

struct Item {
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

using namespace gtpoly;

inline std::vector<Rational> qvec(const Json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(io::rational_from_json(v));
    return out;
}

inline std::multiset<std::pair<std::string, std::vector<std::int64_t>>> tagged_columns(const Tiling& t) {
    auto mat = tiling_matrix(t);
    auto free = t.free_tiles();
    std::multiset<std::pair<std::string, std::vector<std::int64_t>>> out;
    for (std::size_t c = 0; c < free.size(); ++c) {
        std::vector<std::int64_t> col;
        for (const auto& row : mat) col.push_back(row[c].convert_to<std::int64_t>());
        out.emplace(to_string(t.tiles[free[c]].content), col);
    }
    return out;
}

inline std::multiset<std::pair<std::string, std::vector<std::int64_t>>> tagged_columns(const Json& f) {
    std::multiset<std::pair<std::string, std::vector<std::int64_t>>> out;
    const auto& contents = f["free_contents"];
    for (std::size_t c = 0; c < contents.size(); ++c) {
        std::vector<std::int64_t> col;
        for (const auto& row : f["matrix"]) col.push_back(row[c].get<std::int64_t>());
        out.emplace(to_string(io::rational_from_json(contents[c])), col);
    }
    return out;
}

}  // namespace detail

inline std::vector<Item> run(const Json& stored) {
    using namespace gtpoly;
    using detail::qvec;
    std::vector<Item> items;
    auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        Item it{name, false, ""};
        try {
            it.detail = body();
            it.ok = it.detail.empty();
        } catch (const std::exception& e) {
            it.detail = std::string("exception: ") + e.what();
        }
        items.push_back(it);
    };

    check("correspondence", [&] {
        const auto& f = stored["correspondence"];
        auto p = io::pattern_from_json(f["pattern"]);
        auto t = io::tableau_from_json(f["tableau"]);
        if (!(pattern_to_tableau(p) == t)) return std::string("pattern -> tableau differs");
        if (!(tableau_to_pattern(t, p.m()) == p)) return std::string("tableau -> pattern differs");
        if (!(integral_weight(p) == Composition(io::ints_from_json(f["weight"])))) return std::string("weight differs");
        return std::string();
    });
    check("triangular", [&] {
        const auto& f = stored["triangular"];
        auto p = io::pattern_from_json(f["pattern"]);
        auto t = io::tableau_from_json(f["tableau"]);
        if (!(pattern_to_tableau(p) == t)) return std::string("pattern -> tableau differs");
        auto q = tableau_to_pattern(t, p.m());
        if (q.n() > p.n() || !(q.padded_columns(p.n() - q.n()) == p)) return std::string("tableau -> pattern differs");
        return std::string();
    });
    check("addition", [&] {
        const auto& f = stored["addition"];
        auto s = add_patterns(io::pattern_from_json(f["a"]), io::pattern_from_json(f["b"]));
        return io::to_json(s).dump() == io::to_json(io::pattern_from_json(f["sum"])).dump() ? std::string()
                                                                                            : "sum differs: " + io::to_json(s).dump();
    });
    check("concatenation", [&] {
        const auto& f = stored["concatenation"];
        auto c = concat_tableaux(io::tableau_from_json(f["a"]), io::tableau_from_json(f["b"]));
        return io::to_json(c).dump() == io::to_json(io::tableau_from_json(f["result"])).dump()
                   ? std::string()
                   : "result differs: " + io::to_json(c).dump();
    });
    for (const char* name : {"tiling_left", "tiling_right"})
        check(name, [&] {
            const auto& f = stored[name];
            auto t = compute_tiling(io::pattern_from_json(f["pattern"]));
            if (detail::tagged_columns(t) != detail::tagged_columns(f)) return std::string("free tiles or matrix differ");
            return std::string();
        });
    check("integrality_pair", [&] {
        for (const auto& f : stored["integrality_pair"]) {
            PolytopeSpec spec(io::shape_from_json(f["shape"]), Composition(io::ints_from_json(f["weight"])));
            if (is_integral(spec) != f["integral"].get<bool>()) return "wrong verdict for weight " + f["weight"].dump();
        }
        return std::string();
    });
    check("disjoint_union", [&] {
        const auto& f = stored["disjoint_union"];
        auto u = disjoint_union(io::shape_from_json(f["a"]), io::shape_from_json(f["b"]));
        return u == io::shape_from_json(f["result"]) ? std::string() : "got " + io::to_json(u).dump();
    });
    check("six_shapes", [&] {
        auto got = gen_six_shape_vertices();
        const auto& f = stored["six_shapes"];
        if (got.size() != f.size()) return std::string("wrong count");
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (!(got[i].first == io::shape_from_json(f[i]["shape"])) || !(got[i].second == io::pattern_from_json(f[i]["vertex"])))
                return "entry " + std::to_string(i + 1) + " differs";
            PolytopeSpec spec(got[i].first, Composition::ones(got[i].first.boxes()));
            if (!is_vertex(got[i].second, spec)) return "entry " + std::to_string(i + 1) + " is not a vertex";
        }
        return std::string();
    });
    check("three_column", [&] {
        for (const auto& f : stored["three_column"]) {
            int k = f["k"].get<int>();
            if (!(gen_three_column_vertex(k) == io::pattern_from_json(f["vertex"]))) return "k=" + std::to_string(k) + " differs";
        }
        return std::string();
    });
    check("refinement_example", [&] {
        const auto& f = stored["refinement_example"];
        PolytopeSpec spec(io::shape_from_json(f["shape"]), Composition(io::ints_from_json(f["weight"])));
        const auto& s = f["step"];
        RefinementStep step{s["position"].get<std::size_t>(), s["first"].get<std::int64_t>(), s["second"].get<std::int64_t>()};
        auto res = lift_nonintegral_vertex(spec, io::pattern_from_json(f["G"]), step);
        if (!(*res.spec.weight == Composition(io::ints_from_json(f["refined_weight"])))) return std::string("refined weight differs");
        if (!(res.vertex == io::pattern_from_json(f["G_double_prime"]))) return "G'' differs: " + io::to_json(res.vertex).dump();
        auto wide = lift_nonintegral_vertex(spec, io::pattern_from_json(f["G"]), step, Schedule::LargestIndex);
        if (!(wide.inserted == io::pattern_from_json(f["G_prime_displayed"]))) return std::string("G' differs");
        return std::string();
    });
    check("insert_row", [&] {
        const auto& f = stored["insert_row"];
        auto nu = insert_row(qvec(f["top"]), qvec(f["bottom"]), io::rational_from_json(f["t"]), std::nullopt,
                             Schedule::LargestIndex);
        return nu == qvec(f["nu"]) ? std::string() : std::string("nu differs");
    });
    check("box_refinement", [&] {
        const auto& f = stored["box_refinement"];
        auto t = io::tableau_from_json(f["T"]);
        int content = f["content"].get<int>();
        auto out = box_refine_tableau(t, f["k"].get<std::int64_t>(), content, f["first"].get<std::int64_t>(),
                                      f["second"].get<std::int64_t>());
        if (!(out == io::tableau_from_json(f["T_prime"]))) return "T' differs: " + io::to_json(out).dump();
        if (!(box_refine_inverse(out, content) == t)) return std::string("inverse does not recover T");
        return std::string();
    });
    check("poset_431", [&] {
        const auto& f = stored["poset_431"];
        auto poset = build_poset(Partition(io::ints_from_json(f["lambda"])), Partition{}, 1);
        std::map<std::string, std::string> want, got;
        for (const char* style : {"solid", "dashed", "dotted"})
            for (const auto& l : f[style]) want[l.get<std::string>()] = style;
        for (const auto& n : poset.nodes) got[label_of(n.weight)] = n.style();
        if (want != got) return std::string("node styles differ");
        std::set<std::pair<std::string, std::string>> we, ge;
        for (const auto& e : f["edges"]) we.emplace(e[0].get<std::string>(), e[1].get<std::string>());
        for (auto [a, b] : poset.edges) ge.emplace(label_of(poset.nodes[a].weight), label_of(poset.nodes[b].weight));
        return we == ge ? std::string() : std::string("edges differ");
    });
    check("column_split", [&] {
        const auto& f = stored["column_split"];
        auto parts = column_split(io::tableau_from_json(f["T"]), io::shape_from_json(f["base"]), f["k"].get<std::int64_t>());
        if (parts.size() != f["parts"].size()) return std::string("wrong number of parts");
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!(parts[i] == io::tableau_from_json(f["parts"][i]))) return "part " + std::to_string(i + 1) + " differs";
        return std::string();
    });
    return items;
}

}  // namespace repro
