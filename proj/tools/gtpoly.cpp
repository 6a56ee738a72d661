#include "repro.hpp"

#include "gtpoly/decomposition.hpp"
#include "gtpoly/io.hpp"
#include "gtpoly/polytope.hpp"
#include "gtpoly/refinement.hpp"
#include "gtpoly/shapes.hpp"
#include "gtpoly/tiling.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace gtpoly;
using io::Json;

namespace {

struct AnalysisFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda, mu, weight, shape_file, pattern_file, input_file, order = "lex", order_file, mode = "hook";
    std::string json_out, dot_out;
    std::int64_t k = 1, max_k = 2;
    std::size_t rows = 0;
    unsigned threads = 0;
    std::uint64_t seed = 20240101;
    bool timing = false, count_only = false;
};

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw MalformedInput("empty entry in list '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw MalformedInput("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

SkewShape shape_of_options(const Options& o) {
    std::optional<SkewShape> from_file;
    if (!o.shape_file.empty()) {
        auto j = io::read_file(o.shape_file);
        from_file = io::shape_from_json(j.contains("shape") ? j["shape"] : j);
    }
    if (o.lambda.empty()) {
        if (from_file) return *from_file;
        throw MalformedInput("a shape is required (--lambda or --shape)");
    }
    auto lam = parse_list(o.lambda);
    auto mu = o.mu.empty() ? std::vector<std::int64_t>{} : parse_list(o.mu);
    return SkewShape(Partition(lam), Partition(mu)).padded(lam.size());
}

Composition weight_of_options(const Options& o) {
    if (!o.weight.empty()) return Composition(parse_list(o.weight));
    if (!o.shape_file.empty()) {
        auto j = io::read_file(o.shape_file);
        if (j.contains("weight")) return Composition(io::ints_from_json(j["weight"]));
    }
    throw MalformedInput("a weight is required (--weight)");
}

PolytopeSpec spec_of_options(const Options& o) { return PolytopeSpec(shape_of_options(o), weight_of_options(o), o.k); }

unsigned thread_count(const Options& o) {
    if (o.threads) return o.threads;
    if (const char* env = std::getenv("GTPOLY_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void emit(const Json& j, const Options& o) {
    if (o.json_out.empty() || o.json_out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(o.json_out);
    if (!out) throw MalformedInput("cannot write " + o.json_out);
    out << j.dump(2) << "\n";
}

Json spec_json(const PolytopeSpec& s) {
    Json j;
    j["shape"] = io::to_json(s.shape);
    if (s.weight) j["weight"] = io::to_json(*s.weight);
    j["k"] = s.k;
    return j;
}

Json embedding_json(const Embedding& e) {
    Json rows = Json::array(), cols = Json::array();
    for (int r : e.rows) rows.push_back(r + 1);
    for (int c : e.columns) cols.push_back(c + 1);
    return {{"rows", rows}, {"columns", cols}};
}

int cmd_classify(const Options& o) {
    auto s = shape_of_options(o);
    auto c = classify_shape(s);
    Json j;
    j["shape"] = io::to_json(s);
    j["normalized"] = io::to_json(normalize_shape(s).first);
    j["tag"] = to_string(c.tag);
    j["integral"] = c.integral();
    if (c.witness) {
        j["witness"] = {{"forbidden", c.witness->forbidden},
                        {"diagram", io::to_json(c.witness->diagram)},
                        {"embedding", embedding_json(c.witness->embedding)}};
    }
    emit(j, o);
    return 0;
}

int cmd_tiling(const Options& o) {
    if (o.pattern_file.empty()) throw MalformedInput("--pattern FILE is required");
    auto j = io::read_file(o.pattern_file);
    auto p = io::pattern_from_json(j.contains("pattern") ? j["pattern"] : j);
    auto v = validate_pattern(p);
    if (!v) throw MalformedInput("not a GT-pattern: " + v.violation->describe());
    auto t = compute_tiling(p);
    Json out = io::to_json(t);
    auto nullity = kernel_dimension(tiling_matrix(t));
    out["nullity"] = nullity;
    out["is_vertex"] = nullity == 0;
    emit(out, o);
    return 0;
}

int cmd_points(const Options& o) {
    auto spec = spec_of_options(o);
    Json j = spec_json(spec);
    if (o.count_only) {
        j["num_points"] = count_lattice_points(spec);
    } else {
        Json pts = Json::array();
        for (const auto& p : enumerate_lattice_points(spec)) pts.push_back(io::to_json(p));
        j["num_points"] = pts.size();
        j["points"] = pts;
    }
    emit(j, o);
    return 0;
}

int cmd_vertices(const Options& o) {
    auto spec = spec_of_options(o);
    auto vs = compute_vertices(spec);
    Json j = spec_json(spec);
    Json arr = Json::array();
    for (const auto& v : vs.vertices) arr.push_back(io::to_json(v));
    j["num_vertices"] = vs.vertices.size();
    j["dimension"] = polytope_dimension(vs);
    j["integral"] = vs.integral();
    j["vertices"] = arr;
    emit(j, o);
    return 0;
}

int cmd_analyze(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    auto spec = spec_of_options(o);
    if (spec.k != 1) throw MalformedInput("analyze works on the undilated polytope; drop --k");
    auto vs = compute_vertices(spec);
    Json j = spec_json(spec);
    j["empty"] = vs.empty();
    j["integral"] = vs.integral();
    j["num_points"] = count_lattice_points(spec);
    j["num_vertices"] = vs.vertices.size();
    j["dimension"] = polytope_dimension(vs);
    j["unimodular_simplex"] = vs.integral() && is_unimodular_simplex(spec);
    std::int64_t idp = 0;
    if (vs.integral()) {
        auto v = idp_check(spec, o.max_k, true);
        idp = v.holds ? v.checked_up_to : v.counterexample_k - 1;
    }
    j["idp_up_to"] = idp;
    Json witnesses = Json::array();
    for (const auto& v : vs.vertices)
        if (!v.is_integral()) witnesses.push_back(io::to_json(v));
    j["nonintegral_vertices"] = witnesses;
    if (o.timing)
        j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    emit(j, o);
    return 0;
}

int cmd_idp(const Options& o) {
    auto spec = spec_of_options(o);
    if (spec.k != 1) throw MalformedInput("idp works on the undilated polytope; drop --k");
    auto v = idp_check(spec, o.max_k);
    Json j = spec_json(spec);
    j["holds"] = v.holds;
    j["checked_up_to"] = v.checked_up_to;
    if (v.counterexample) {
        j["counterexample"] = io::to_json(*v.counterexample);
        j["counterexample_k"] = v.counterexample_k;
    }
    emit(j, o);
    return 0;
}

int cmd_triangulate(const Options& o) {
    auto spec = spec_of_options(o);
    auto vs = compute_vertices(spec);
    std::size_t V = vs.vertices.size();
    std::vector<std::size_t> order(V);
    std::iota(order.begin(), order.end(), 0);
    if (o.order == "revlex") {
        std::reverse(order.begin(), order.end());
    } else if (o.order == "shuffle") {
        std::mt19937_64 rng(o.seed);
        std::shuffle(order.begin(), order.end(), rng);
    } else if (o.order == "file") {
        if (o.order_file.empty()) throw MalformedInput("--order file needs --order-file");
        auto j = io::read_file(o.order_file);
        order.clear();
        for (const auto& v : j) {
            auto x = v.get<std::int64_t>();
            if (x < 1) throw MalformedInput("vertex indices in the order file are 1-based");
            order.push_back(static_cast<std::size_t>(x - 1));
        }
    } else if (o.order != "lex") {
        throw MalformedInput("unknown --order '" + o.order + "'");
    }
    auto tri = pulling_triangulation(spec, order);
    Json j = spec_json(spec);
    j["dimension"] = tri.dimension;
    j["complete"] = tri.complete;
    Json verts = Json::array();
    for (const auto& v : tri.vertices) verts.push_back(io::to_json(v));
    j["vertices"] = verts;
    Json simplices = Json::array();
    bool unimodular = true;
    for (const auto& s : tri.simplices) {
        Json idx = Json::array();
        for (auto v : s.vertices) idx.push_back(v + 1);
        simplices.push_back({{"vertices", idx}, {"normalized_volume", s.normalized_volume.convert_to<std::int64_t>()}});
        if (s.normalized_volume != 1) unimodular = false;
    }
    j["simplices"] = simplices;
    j["all_unimodular"] = unimodular;
    emit(j, o);
    return 0;
}

int cmd_poset(const Options& o) {
    if (o.lambda.empty()) throw MalformedInput("--lambda is required");
    Partition lam(parse_list(o.lambda));
    Partition mu(o.mu.empty() ? std::vector<std::int64_t>{} : parse_list(o.mu));
    auto poset = build_poset(lam, mu, o.max_k, thread_count(o));
    if (!o.dot_out.empty()) {
        auto dot = poset_to_dot(poset);
        if (o.dot_out == "-") {
            std::cout << dot;
        } else {
            std::ofstream out(o.dot_out);
            if (!out) throw MalformedInput("cannot write " + o.dot_out);
            out << dot;
        }
    }
    if (!o.json_out.empty() || o.dot_out.empty()) {
        Json j;
        j["shape"] = io::to_json(poset.shape);
        Json nodes = Json::array();
        for (const auto& n : poset.nodes)
            nodes.push_back({{"weight", io::to_json(n.weight)},
                             {"label", label_of(n.weight)},
                             {"style", n.style()},
                             {"integral", n.integral},
                             {"num_points", n.lattice_points},
                             {"idp_up_to", n.idp_up_to},
                             {"unimodular_simplex", n.unimodular_simplex}});
        j["nodes"] = nodes;
        Json edges = Json::array();
        for (auto [a, b] : poset.edges) edges.push_back({label_of(poset.nodes[a].weight), label_of(poset.nodes[b].weight)});
        j["edges"] = edges;
        emit(j, o);
    }
    return 0;
}

SkewShape divide_shape(const SkewShape& s, std::int64_t k) {
    std::vector<std::int64_t> lam, mu;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s.lambda()[i] % k || s.mu()[i] % k) throw MalformedInput("tableau shape is not a k-fold dilation");
        lam.push_back(s.lambda()[i] / k);
        mu.push_back(s.mu()[i] / k);
    }
    return SkewShape(Partition(lam), Partition(mu)).padded(lam.size());
}

int cmd_decompose(const Options& o) {
    if (o.input_file.empty()) throw MalformedInput("--input FILE is required");
    auto in = io::read_file(o.input_file);
    Json j;
    if (o.mode == "contingency") {
        auto p = io::pattern_from_json(in.contains("pattern") ? in["pattern"] : in);
        auto w = integral_weight(p).parts();
        for (auto& x : w) {
            if (x % o.k) throw MalformedInput("pattern weight is not k times an integer composition");
            x /= o.k;
        }
        PolytopeSpec spec(divide_shape(shape_of(p), o.k), Composition(w), o.k);
        auto c = to_contingency(p, spec);
        j["entries"] = c.entries;
        j["row_sums"] = c.row_sums;
        j["col_sums"] = c.col_sums;
        emit(j, o);
        return 0;
    }
    auto t = io::tableau_from_json(in.contains("tableau") ? in["tableau"] : in);
    auto base = divide_shape(t.shape(), o.k);
    std::vector<SkewTableau> parts;
    if (o.mode == "hook") {
        auto tag = classify_shape(base).tag;
        bool reverse = tag == ShapeTag::ReverseHook && base.mu()[0] > 0;
        parts = full_decomposition(t, base, o.k, reverse);
    } else if (o.mode == "columns") {
        parts = column_split(t, base, o.k);
    } else {
        throw MalformedInput("unknown --mode '" + o.mode + "'");
    }
    Json arr = Json::array();
    for (const auto& p : parts) arr.push_back(io::to_json(p));
    j["base"] = io::to_json(base);
    j["k"] = o.k;
    j["components"] = arr;
    emit(j, o);
    return 0;
}

int cmd_repro(const Options& o) {
    auto stored = io::read_file(std::string(GTPOLY_FIXTURES) + "/worked_examples.json");
    auto items = repro::run(stored);
    bool all = true;
    Json arr = Json::array();
    for (const auto& it : items) {
        std::cerr << (it.ok ? "match    " : "MISMATCH ") << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
        arr.push_back({{"name", it.name}, {"match", it.ok}, {"detail", it.detail}});
        all = all && it.ok;
    }
    if (!o.json_out.empty()) emit({{"items", arr}, {"all_match", all}}, o);
    if (!all) throw AnalysisFailure("some worked examples do not match the fixtures");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Tsetlin polytope toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_shape = [&](CLI::App* c) {
        c->add_option("--lambda", o.lambda, "outer partition, comma separated");
        c->add_option("--mu", o.mu, "inner partition, comma separated");
        c->add_option("--shape", o.shape_file, "JSON file with a shape (and optionally a weight)");
    };
    auto add_spec = [&](CLI::App* c) {
        add_shape(c);
        c->add_option("--weight", o.weight, "weight composition, comma separated");
        c->add_option("--k", o.k, "dilation factor")->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--json", o.json_out, "write JSON here instead of stdout"); };

    std::map<std::string, std::function<int(const Options&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> h) {
        handlers[name] = std::move(h);
        auto* c = app.add_subcommand(name, help);
        add_out(c);
        c->add_option("--threads", o.threads, "worker threads (GTPOLY_THREADS otherwise)");
        c->add_option("--seed", o.seed, "seed for randomized choices");
        return c;
    };

    add_shape(sub("classify", "integral-family tag or forbidden witness", cmd_classify));
    sub("tiling", "tiles, tiling matrix and vertex test of a pattern", cmd_tiling)
        ->add_option("--pattern", o.pattern_file, "JSON pattern file (rows bottom first)");
    auto* pts = sub("points", "lattice points", cmd_points);
    add_spec(pts);
    pts->add_flag("--count", o.count_only, "only count");
    add_spec(sub("vertices", "vertices", cmd_vertices));
    auto* an = sub("analyze", "full report", cmd_analyze);
    add_spec(an);
    an->add_option("--max-k", o.max_k, "largest dilation for the IDP check");
    an->add_flag("--timing", o.timing, "include elapsed time");
    auto* idp = sub("idp", "integer decomposition check", cmd_idp);
    add_spec(idp);
    idp->add_option("--max-k", o.max_k, "largest dilation to check");
    auto* tri = sub("triangulate", "pulling triangulation", cmd_triangulate);
    add_spec(tri);
    tri->add_option("--order", o.order, "lex|revlex|shuffle|file");
    tri->add_option("--order-file", o.order_file, "JSON list of 1-based vertex indices");
    auto* pos = sub("poset", "refinement poset", cmd_poset);
    pos->add_option("--lambda", o.lambda, "outer partition")->required();
    pos->add_option("--mu", o.mu, "inner partition");
    pos->add_option("--max-k", o.max_k, "largest dilation for the IDP check");
    pos->add_option("--dot", o.dot_out, "write DOT here ('-' for stdout)");
    auto* dec = sub("decompose", "hook, column or contingency decomposition", cmd_decompose);
    dec->add_option("--mode", o.mode, "hook|columns|contingency");
    dec->add_option("--input", o.input_file, "JSON tableau or pattern");
    dec->add_option("--k", o.k, "dilation factor")->check(CLI::PositiveNumber);
    sub("repro", "replay the stored worked examples", cmd_repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        for (auto* c : app.get_subcommands()) return handlers.at(c->get_name())(o);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisFailure& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
