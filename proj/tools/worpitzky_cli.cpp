// Command-line front end: graph-class recognition, compatibility deciders,
// polynomial computation, alcove dumps, and the exhaustive verification
// suites.
//
// Exit codes: 0 member/compatible/pass, 1 non-member/not compatible,
// 2 usage or input error, 3 decider divergence or failed invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "worpitzky/alcoves.hpp"
#include "worpitzky/compatibility.hpp"
#include "worpitzky/graph.hpp"
#include "worpitzky/orderings.hpp"
#include "worpitzky/polynomials.hpp"
#include "worpitzky/verify.hpp"

using json = nlohmann::json;
using namespace worpitzky;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitError = 2;
constexpr int kExitDivergence = 3;

int perm_bound_from_env() {
    if (const char* s = std::getenv("WORPITZKY_MAX_PERM_N")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return kPermutationBound;
}

struct GraphInput {
    std::string edgelist_path;
    std::string graph6;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--edgelist", edgelist_path, "graph as an edge-list file");
        auto* b = cmd->add_option("--graph6", graph6, "graph as a graph6 string");
        a->excludes(b);
    }

    LabeledGraph load() const {
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edgelist_path.empty()) {
            std::ifstream in(edgelist_path);
            if (!in) throw std::runtime_error("cannot open " + edgelist_path);
            std::ostringstream body;
            body << in.rdbuf();
            return parse_edge_list(body.str());
        }
        throw std::runtime_error("no graph given; use --edgelist or --graph6");
    }
};

int run_recognize(const std::string& cls, const GraphInput& input) {
    LabeledGraph g = input.load();
    std::optional<VertexOrdering> wit;
    bool member = false;
    if (cls == "cocomparability") {
        wit = find_umbrella_free_ordering(g);
        member = wit.has_value();
    } else if (cls == "comparability") {
        auto ori = transitive_orientation(g);
        member = ori.has_value();
        if (ori) wit = linear_extension(*ori);
    } else if (cls == "interval") {
        wit = find_interval_ordering(g);
        member = wit.has_value();
    } else if (cls == "unit-interval") {
        wit = find_unit_interval_ordering(g);
        member = wit.has_value();
    } else if (cls == "chordal") {
        wit = perfect_elimination_ordering(g);
        member = wit.has_value();
    } else {
        throw std::runtime_error("unknown class: " + cls);
    }
    if (member) {
        std::cout << "member (" << cls << ")";
        if (wit) std::cout << "  witness ordering: " << wit->str();
        std::cout << "\n";
        return kExitMember;
    }
    std::cout << "non-member (" << cls << ")\n";
    return kExitNonMember;
}

int run_compat(const std::string& method, const GraphInput& input, int geometric_max) {
    LabeledGraph g = input.load();
    RootSubset psi = to_root_subset(g);
    int verdict = -1;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << name << ": " << (ok ? "compatible" : "not compatible") << "\n";
        if (verdict == -1) verdict = ok ? kExitMember : kExitNonMember;
        return ok;
    };
    bool t = false, c = false, geo = false;
    if (method == "triples" || method == "all") t = report("triples", is_compatible_triples(g));
    if (method == "chains" || method == "all") c = report("chains", is_strongly_compatible(psi));
    if (method == "geometric" || method == "all")
        geo = report("geometric", g.vertex_count() < 2 ? true
                                                       : is_compatible_geometric(psi, geometric_max));
    if (method == "all" && (t != c || t != geo)) {
        std::cout << "DIVERGENCE on graph6=" << to_graph6(g) << "\n";
        return kExitDivergence;
    }
    return verdict;
}

int run_poly(const std::string& kind, const GraphInput& input, bool as_json, int perm_bound) {
    LabeledGraph g = input.load();
    IntPoly p;
    if (kind == "chromatic") p = chromatic(g);
    else if (kind == "W") p = graphic_eulerian(g, perm_bound);
    else if (kind == "F") p = a_eulerian(g, perm_bound);
    else if (kind == "Y") p = reduced_graphic_eulerian(g, perm_bound);
    else throw std::runtime_error("unknown polynomial kind: " + kind);

    if (as_json) {
        json out = {{"kind", kind},
                    {"n", g.vertex_count()},
                    {"coefficients", coefficient_strings(p)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << kind << ": " << p.str() << "\n";
    }
    return 0;
}

int run_alcoves(int n, bool as_json) {
    auto alcoves = enumerate_alcoves_in_box(n);
    json all = json::array();
    for (const auto& a : alcoves) {
        AlcoveGeometry geo = geometry(a);
        if (as_json) {
            json ja;
            ja["n"] = n;
            json r = json::object();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    r[std::to_string(i) + "," + std::to_string(j)] = a.level(i, j);
            ja["r"] = r;
            json ceilings = json::array();
            for (const auto& w : geo.walls)
                if (w.kind == WallKind::ceiling)
                    ceilings.push_back({{"root", std::to_string(w.root.first) + "," +
                                                     std::to_string(w.root.second)},
                                        {"level", w.level}});
            ja["ceilings"] = ceilings;
            json verts = json::array();
            for (const auto& v : geo.vertices) {
                json pt = json::array();
                for (const auto& c : v) pt.push_back(c.get_str());
                verts.push_back(pt);
            }
            ja["vertices"] = verts;
            all.push_back(ja);
        } else {
            std::cout << "alcove";
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    std::cout << " r(" << i << "," << j << ")=" << a.level(i, j);
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << all.dump() << "\n";
    else std::cout << alcoves.size() << " alcoves\n";
    return 0;
}

int run_verify(int max_vertices, int geometric_max, std::uint64_t seed, bool as_json,
               int perm_bound) {
    if (max_vertices > 6 || max_vertices < 1)
        throw std::runtime_error("--max-vertices must be between 1 and 6");
    if (geometric_max > 5 || geometric_max < 2)
        throw std::runtime_error("--geometric-max must be between 2 and 5");

    auto reports = run_all_suites(max_vertices, geometric_max, seed, perm_bound);
    bool all_ok = true;
    json jrep = json::array();
    for (const auto& rep : reports) {
        if (as_json) {
            jrep.push_back({{"suite", rep.suite},
                            {"checked", rep.checked},
                            {"failed", rep.failures}});
        } else {
            std::cout << rep.suite << ": checked=" << rep.checked
                      << " failed=" << rep.failures.size() << "\n";
        }
        if (!rep.ok()) {
            all_ok = false;
            if (!as_json)
                std::cout << "  first counterexample: " << rep.failures.front() << "\n";
        }
    }
    if (as_json) std::cout << jrep.dump() << "\n";
    else std::cout << (all_ok ? "all suites pass" : "FAILURES found") << "\n";
    return all_ok ? kExitMember : kExitDivergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Worpitzky compatibility of graphic arrangements: deciders, graph-class "
                 "recognition, chromatic/Eulerian polynomials, alcove geometry"};
    app.require_subcommand(1);
    int perm_bound = perm_bound_from_env();

    auto* rec = app.add_subcommand("recognize", "decide membership in a graph class");
    std::string cls;
    rec->add_option("class", cls, "cocomparability|comparability|interval|unit-interval|chordal")
        ->required();
    GraphInput rec_in;
    rec_in.attach(rec);

    auto* comp = app.add_subcommand("compat", "decide Worpitzky compatibility");
    std::string method = "all";
    comp->add_option("--method", method, "triples|chains|geometric|all")
        ->check(CLI::IsMember({"triples", "chains", "geometric", "all"}));
    int geometric_max = kGeometricBound;
    comp->add_option("--geometric-max", geometric_max, "bound for the geometric decider");
    GraphInput comp_in;
    comp_in.attach(comp);

    auto* poly = app.add_subcommand("poly", "compute a graph polynomial");
    std::string kind;
    poly->add_option("--kind", kind, "chromatic|W|F|Y")->required();
    bool poly_json = false;
    poly->add_flag("--json", poly_json, "emit JSON");
    GraphInput poly_in;
    poly_in.attach(poly);

    auto* alc = app.add_subcommand("alcoves", "enumerate alcoves of the fundamental box");
    int alc_n = 0;
    alc->add_option("--n", alc_n, "rank parameter (2..7)")->required();
    bool alc_json = false;
    alc->add_flag("--json", alc_json, "emit JSON");

    auto* ver = app.add_subcommand("verify", "run the exhaustive verification suites");
    int max_vertices = 5;
    int ver_geom = 5;
    std::uint64_t seed = 1;
    bool ver_json = false;
    ver->add_option("--max-vertices", max_vertices, "graph suites bound (<= 6)");
    ver->add_option("--geometric-max", ver_geom, "geometry suites bound (<= 5)");
    ver->add_option("--seed", seed, "seed for the sampling suites");
    ver->add_flag("--json", ver_json, "emit JSON");

    try {
        app.parse(argc, argv);
        if (rec->parsed()) return run_recognize(cls, rec_in);
        if (comp->parsed()) return run_compat(method, comp_in, geometric_max);
        if (poly->parsed()) return run_poly(kind, poly_in, poly_json, perm_bound);
        if (alc->parsed()) return run_alcoves(alc_n, alc_json);
        if (ver->parsed()) return run_verify(max_vertices, ver_geom, seed, ver_json, perm_bound);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
