#include "gpe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "gpe/acceptance.hpp"
#include "gpe/automorphism.hpp"
#include "gpe/blocks.hpp"
#include "gpe/distance.hpp"
#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/graph_io.hpp"
#include "gpe/random_graphs.hpp"
#include "gpe/solver.hpp"
#include "gpe/theta.hpp"

namespace gpe {

namespace {

using nlohmann::json;

Graph family_graph(const std::string& family, int n, bool n_given) {
    if (family == "fig3") {
        if (n_given) throw precondition_error("fig3 takes no --n");
        return fig3_graph();
    }
    if (!n_given) throw precondition_error("--family " + family + " needs --n");
    if (family == "hypercube") return hypercube(n);
    if (family == "fibonacci") return fibonacci_cube(n);
    if (family == "lucas") return lucas_cube(n);
    if (family == "grid") return grid(n);
    throw precondition_error("unknown family: " + family);
}

Graph graph_from_file(const std::string& path, std::istream& in, bool allow_disconnected) {
    if (path == "-") return load_graph(in, allow_disconnected);
    std::ifstream f(path);
    if (!f) throw io_error("cannot open " + path);
    return load_graph(f, allow_disconnected);
}

std::string edge_text(const Graph& g, int e) {
    auto [u, v] = g.edges()[e];
    return std::to_string(u) + "-" + std::to_string(v);
}

json edge_json(const Graph& g, int e) {
    auto [u, v] = g.edges()[e];
    return json::array({u, v});
}

json set_json(const Graph& g, const EdgeSet& x) {
    json a = json::array();
    for (int e : x.to_vector()) a.push_back(edge_json(g, e));
    return a;
}

/// Class id -> index into partition.classes: ids are coordinates when the
/// partition is tagged, ordinals otherwise.
int class_index_for_id(const ThetaPartition& p, int id) {
    if (!p.coordinates.empty()) {
        for (int k = 0; k < p.class_count(); ++k)
            if (p.coordinates[k] == id) return k;
        throw io_error("no class with coordinate " + std::to_string(id));
    }
    if (id < 1 || id > p.class_count())
        throw io_error("class " + std::to_string(id) + " out of range");
    return id - 1;
}

int checked_edge_index(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw io_error("vertex out of range in edge " + std::to_string(u) + " " +
                       std::to_string(v));
    int id = g.edge_index(u, v);
    if (id == -1)
        throw io_error("no edge " + std::to_string(u) + " " + std::to_string(v));
    return id;
}

/// Reads one or more edge sets: either the line format (`e u v` and
/// `class i` directives) or the JSON emitted by solve --json.
std::vector<EdgeSet> read_edge_sets(const Graph& g, const DistanceMatrix& d,
                                    const std::string& path, std::istream& in, int threads) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) throw io_error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }

    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw io_error(std::string("bad json: ") + e.what());
        }
        if (!j.is_object() || !j.contains("witnesses") || !j["witnesses"].is_array())
            throw io_error("expected an object with a witnesses array");
        std::vector<EdgeSet> sets;
        for (const json& w : j["witnesses"]) {
            if (!w.is_array()) throw io_error("witness entries must be arrays of edges");
            EdgeSet x(g.size());
            for (const json& e : w) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer())
                    throw io_error("edges must be [u, v] pairs");
                x.set(checked_edge_index(g, e[0].get<int>(), e[1].get<int>()));
            }
            sets.push_back(std::move(x));
        }
        if (sets.empty()) throw io_error("witnesses array is empty");
        return sets;
    }

    std::istringstream ss(text);
    EdgeSetSpec spec = parse_edge_set(ss);
    EdgeSet x(g.size());
    for (auto [u, v] : spec.edges) x.set(checked_edge_index(g, u, v));
    if (!spec.class_ids.empty()) {
        ThetaPartition p = theta_partition(g, d, threads);
        for (int id : spec.class_ids) x |= p.classes[class_index_for_id(p, id)];
    }
    return {x};
}

int cmd_gen(const std::string& family, int n, bool n_given, const std::string& out_path,
            std::ostream& out) {
    Graph g = family_graph(family, n, n_given);
    if (out_path.empty()) {
        save_graph(g, out);
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) throw io_error("cannot open " + out_path);
    save_graph(g, f);
    return 0;
}

int cmd_dist(const Graph& g, int threads, bool json_mode, int qu, int qv, bool query,
             std::ostream& out) {
    DistanceMatrix d = all_pairs_distances(g, threads);
    if (query) {
        if (qu < 0 || qu >= g.order() || qv < 0 || qv >= g.order())
            throw precondition_error("query vertices out of range");
        if (json_mode)
            out << json{{"u", qu}, {"v", qv}, {"distance", d(qu, qv)}}.dump() << "\n";
        else
            out << d(qu, qv) << "\n";
        return 0;
    }
    if (json_mode) {
        json rows = json::array();
        for (int u = 0; u < g.order(); ++u) {
            json row = json::array();
            for (int v = 0; v < g.order(); ++v) row.push_back(d(u, v));
            rows.push_back(std::move(row));
        }
        out << json{{"order", g.order()}, {"matrix", rows}}.dump() << "\n";
        return 0;
    }
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) out << (v ? " " : "") << d(u, v);
        out << "\n";
    }
    return 0;
}

// family is empty when the graph came from a file; for fibonacci and lucas
// members the class sizes are additionally checked against the closed form,
// and a failed check exits 1.
int cmd_theta(const Graph& g, const std::string& family, int n, int threads, bool json_mode,
              std::ostream& out) {
    DistanceMatrix d = all_pairs_distances(g, threads);
    ThetaPartition p = theta_partition(g, d, threads);
    bool has_formula = family == "fibonacci" || family == "lucas";
    bool holds = true;
    if (has_formula)
        holds = class_size_formula_check(
            family == "fibonacci" ? CubeFamily::fibonacci : CubeFamily::lucas, n);
    if (json_mode) {
        json j;
        j["classes"] = p.class_count();
        j["coordinates"] = p.coordinates;
        json sizes = json::array();
        for (const EdgeSet& c : p.classes) sizes.push_back(c.count());
        j["sizes"] = sizes;
        json members = json::array();
        for (const EdgeSet& c : p.classes) members.push_back(set_json(g, c));
        j["members"] = members;
        if (has_formula) j["formula_holds"] = holds;
        out << j.dump() << "\n";
        return holds ? 0 : 1;
    }
    out << "classes " << p.class_count() << "\n";
    for (int k = 0; k < p.class_count(); ++k) {
        int id = p.coordinates.empty() ? k + 1 : p.coordinates[k];
        out << "class " << id << " size " << p.classes[k].count() << ":";
        for (int e : p.classes[k].to_vector()) out << " " << edge_text(g, e);
        out << "\n";
    }
    if (has_formula)
        out << (holds ? "PASS" : "FAIL") << " class sizes of " << family << " n=" << n
            << (holds ? " match the closed form" : " do not match the closed form") << "\n";
    return holds ? 0 : 1;
}

int cmd_verify(const Graph& g, int threads, bool maximal_flag, const std::string& edges_path,
               std::istream& in, std::ostream& out) {
    DistanceMatrix d = all_pairs_distances(g, threads);
    std::vector<EdgeSet> sets = read_edge_sets(g, d, edges_path, in, threads);

    json verdict;
    verdict["checked"] = sets.size();
    bool all_gp = true, all_maximal = true;
    for (std::size_t i = 0; i < sets.size() && all_gp && all_maximal; ++i) {
        GpVerdict v = is_edge_gp_set(g, d, sets[i], threads);
        if (!v.is_gp) {
            all_gp = false;
            json edges = json::array();
            for (int e : v.violation->edges) edges.push_back(edge_json(g, e));
            verdict["violation"] = {{"witness", i},
                                    {"edges", edges},
                                    {"endpoints", {v.violation->endpoints.first,
                                                   v.violation->endpoints.second}}};
            break;
        }
        if (maximal_flag && !is_maximal_edge_gp_set(g, d, sets[i])) {
            all_maximal = false;
            for (int e = 0; e < g.size(); ++e)
                if (!sets[i].test(e) && can_extend(g, d, sets[i], e)) {
                    verdict["extension"] = {{"witness", i}, {"edge", edge_json(g, e)}};
                    break;
                }
        }
    }
    verdict["is_gp"] = all_gp;
    if (maximal_flag && all_gp) verdict["is_maximal"] = all_maximal;
    out << verdict.dump() << "\n";
    return all_gp && (!maximal_flag || all_maximal) ? 0 : 1;
}

int cmd_maximal(const Graph& g, int threads, const std::string& edges_path, std::uint64_t seed,
                bool json_mode, std::istream& in, std::ostream& out, std::ostream& err) {
    DistanceMatrix d = all_pairs_distances(g, threads);
    EdgeSet x(g.size());
    if (!edges_path.empty()) {
        std::vector<EdgeSet> sets = read_edge_sets(g, d, edges_path, in, threads);
        if (sets.size() != 1) throw io_error("maximal needs a single starting set");
        x = sets[0];
        if (!is_edge_gp_set(g, d, x, threads).is_gp) {
            err << "error: starting set is not in general position\n";
            return 1;
        }
    }
    // One greedy pass in seeded random order; conflicts only grow, so a
    // skipped edge never becomes addable again.
    std::vector<int> order(g.size());
    for (int e = 0; e < g.size(); ++e) order[e] = e;
    std::mt19937_64 rng(seed);
    for (int i = g.size() - 1; i > 0; --i)
        std::swap(order[i], order[rand_below(rng, i + 1)]);
    for (int e : order)
        if (!x.test(e) && can_extend(g, d, x, e)) x.set(e);

    if (json_mode) {
        out << json{{"size", x.count()}, {"edges", set_json(g, x)}}.dump() << "\n";
        return 0;
    }
    out << "# maximal set, size " << x.count() << "\n";
    for (int e : x.to_vector()) {
        auto [u, v] = g.edges()[e];
        out << "e " << u << " " << v << "\n";
    }
    return 0;
}

int cmd_solve(const Graph& g, int threads, bool enumerate_all, const std::string& bound_name,
              bool json_mode, std::ostream& out) {
    DistanceMatrix d = all_pairs_distances(g, threads);
    SolveOptions opt;
    opt.enumerate_all = enumerate_all;
    opt.threads = threads;
    opt.bound = bound_name == "none"       ? BoundMode::none
                : bound_name == "counting" ? BoundMode::counting
                                           : BoundMode::cover;
    SolveResult r = solve_gp_e(g, d, opt);

    bool with_orbits = enumerate_all && g.order() <= 20;
    int orbits = 0;
    if (with_orbits) orbits = orbit_count(g, r.witnesses, automorphisms(g, d));

    if (json_mode) {
        json j;
        j["optimum"] = r.optimum;
        json ws = json::array();
        for (const EdgeSet& w : r.witnesses) ws.push_back(set_json(g, w));
        j["witnesses"] = ws;
        j["nodes_explored"] = r.nodes_explored;
        if (with_orbits) j["orbit_count"] = orbits;
        out << j.dump() << "\n";
        return 0;
    }
    out << "optimum " << r.optimum << "\n";
    out << "nodes " << r.nodes_explored << "\n";
    for (const EdgeSet& w : r.witnesses) {
        out << "witness";
        for (int e : w.to_vector()) out << " " << edge_text(g, e);
        out << "\n";
    }
    if (with_orbits) out << "orbits " << orbits << "\n";
    return 0;
}

int cmd_conjecture(int max_n, int threads, bool json_mode, std::ostream& out) {
    std::vector<ConjectureRow> rows = conjecture_sweep(max_n, threads);
    bool any_below = false;
    json arr = json::array();
    for (const ConjectureRow& row : rows) {
        std::string verdict = row.optimum == row.predicted ? "EQUAL"
                              : row.optimum > row.predicted ? "GREATER"
                                                            : "BELOW";
        if (verdict == "BELOW") any_below = true;
        if (json_mode)
            arr.push_back({{"n", row.n},
                           {"optimum", row.optimum},
                           {"predicted", row.predicted},
                           {"verdict", verdict},
                           {"nodes", row.nodes}});
        else
            out << "n=" << row.n << " optimum=" << row.optimum << " predicted=" << row.predicted
                << " " << verdict << " nodes=" << row.nodes << "\n";
    }
    if (json_mode) out << arr.dump() << "\n";
    return any_below ? 1 : 0;
}

int cmd_blocks(const Graph& g, int threads, std::uint64_t seed, bool json_mode,
               std::ostream& out) {
    BlockDecomposition bd = block_decomposition(g);

    // The end block class union only exists for partial cubes; for anything
    // else the decomposition alone is the answer.
    bool have_set = false;
    EdgeSet x(0);
    if (g.connected()) {
        DistanceMatrix d = all_pairs_distances(g, threads);
        if (is_partial_cube(g, d)) {
            ThetaPartition p = theta_partition(g, d, threads);
            std::mt19937_64 rng(seed);
            ClassSelector pick = [&rng](int, std::span<const int> candidates) {
                return (int)candidates[rand_below(rng, candidates.size())];
            };
            x = end_block_gp_set(g, d, p, pick);
            have_set = true;
        }
    }

    if (json_mode) {
        json j;
        json blocks = json::array();
        for (const EdgeSet& b : bd.blocks) blocks.push_back(set_json(g, b));
        j["blocks"] = blocks;
        j["cut_vertices"] = bd.cut_vertices;
        j["end_blocks"] = bd.end_blocks;
        if (have_set) j["gp_set"] = set_json(g, x);
        out << j.dump() << "\n";
        return 0;
    }
    out << "blocks " << bd.blocks.size() << "\n";
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        out << "block " << b << ":";
        for (int e : bd.blocks[b].to_vector()) out << " " << edge_text(g, e);
        out << "\n";
    }
    out << "cut vertices:";
    for (int v : bd.cut_vertices) out << " " << v;
    out << "\n";
    out << "end blocks:";
    for (int b : bd.end_blocks) out << " " << b;
    out << "\n";
    if (have_set) {
        out << "gp set:";
        for (int e : x.to_vector()) out << " " << edge_text(g, e);
        out << "\n";
    }
    return 0;
}

int cmd_autos(const Graph& g, bool json_mode, std::ostream& out) {
    DistanceMatrix d = all_pairs_distances(g, 0);
    std::vector<std::vector<int>> autos = automorphisms(g, d);
    if (json_mode) {
        out << json{{"count", autos.size()}, {"automorphisms", autos}}.dump() << "\n";
        return 0;
    }
    out << "count " << autos.size() << "\n";
    return 0;
}

int cmd_paper_check(const std::string& scope, int threads, bool json_mode, std::ostream& out) {
    std::vector<int> ids;
    if (scope == "s1") ids = {8};
    else if (scope == "s2") ids = {11};
    else if (scope == "s3") ids = {3, 9, 10};
    else if (scope == "s4") ids = {1, 2, 4, 5, 6, 7};

    std::vector<CriterionResult> results = run_acceptance(ids, threads);
    bool all_pass = true;
    if (json_mode) {
        json arr = json::array();
        for (const CriterionResult& r : results) {
            all_pass = all_pass && r.pass;
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        }
        out << arr.dump() << "\n";
    } else {
        for (const CriterionResult& r : results) {
            all_pass = all_pass && r.pass;
            out << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name
                << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
            if (!r.detail.empty()) out << ": " << r.detail;
            out << "\n";
        }
        out << (all_pass ? "all checks hold" : "some checks FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"partial cube edge general position toolkit"};
    app.require_subcommand(1);

    std::string family, graphfile, edges_path, out_path, scope = "all";
    std::string bound_name = "cover";
    int n = 0, threads = 0, max_n = 6, qu = 0, qv = 0;
    std::uint64_t seed = 0;
    bool json_mode = false, enumerate_all = false, maximal_flag = false;
    bool allow_disconnected = false;

    const std::vector<std::string> families{"hypercube", "fibonacci", "lucas", "grid", "fig3"};

    CLI::App* gen = app.add_subcommand("gen", "generate a family member as a graph file");
    gen->add_option("--family", family, "graph family")
        ->required()
        ->required()
        ->check(CLI::IsMember(families));
    CLI::Option* gen_n = gen->add_option("--n", n, "size parameter");
    gen->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* dist = app.add_subcommand("dist", "all pairs distances, or one query");
    dist->add_option("graph", graphfile, "graph file, - for stdin")->required();
    CLI::Option* dist_u = dist->add_option("u", qu, "query source");
    CLI::Option* dist_v = dist->add_option("v", qv, "query target");
    dist->add_flag("--json", json_mode, "JSON output");
    dist->add_option("--threads", threads, "thread count, 0 = all");
    dist->add_flag("--allow-disconnected", allow_disconnected, "permit a disconnected graph");

    CLI::App* theta = app.add_subcommand("theta", "relation classes of a bipartite graph");
    CLI::Option* theta_graph = theta->add_option("graph", graphfile, "graph file, - for stdin");
    theta->add_option("--family", family, "generate instead of loading")
        ->check(CLI::IsMember({"hypercube", "fibonacci", "lucas", "grid", "fig3"}));
    CLI::Option* theta_n = theta->add_option("--n", n, "size parameter");
    theta->add_flag("--json", json_mode, "JSON output");
    theta->add_option("--threads", threads, "thread count, 0 = all");
    theta->add_flag("--allow-disconnected", allow_disconnected, "permit a disconnected graph");

    CLI::App* verify = app.add_subcommand("verify", "check an edge set for general position");
    verify->add_option("graph", graphfile, "graph file, - for stdin")->required();
    verify->add_option("--edges", edges_path, "edge set file, - for stdin")->required();
    verify->add_flag("--maximal", maximal_flag, "also require maximality");
    verify->add_flag("--json", json_mode, "JSON output (the verdict always is)");
    verify->add_option("--threads", threads, "thread count, 0 = all");
    verify->add_flag("--allow-disconnected", allow_disconnected, "permit a disconnected graph");

    CLI::App* maximal = app.add_subcommand("maximal", "grow a set to a maximal one");
    maximal->add_option("graph", graphfile, "graph file, - for stdin")->required();
    maximal->add_option("--edges", edges_path, "starting set, - for stdin");
    maximal->add_option("--seed", seed, "candidate order seed");
    maximal->add_flag("--json", json_mode, "JSON output");
    maximal->add_option("--threads", threads, "thread count, 0 = all");
    maximal->add_flag("--allow-disconnected", allow_disconnected,
                      "permit a disconnected graph");

    CLI::App* solve = app.add_subcommand("solve", "exact maximum general position set");
    solve->add_option("graph", graphfile, "graph file, - for stdin");
    solve->add_option("--family", family, "generate instead of loading")
        ->check(CLI::IsMember(families));
    CLI::Option* solve_n = solve->add_option("--n", n, "size parameter");
    solve->add_flag("--enumerate-all", enumerate_all, "every maximum set, not just one");
    solve->add_option("--bound", bound_name, "pruning bound")
        ->check(CLI::IsMember({"cover", "counting", "none"}));
    solve->add_flag("--json", json_mode, "JSON output");
    solve->add_option("--threads", threads, "thread count, 0 = all");
    solve->add_flag("--allow-disconnected", allow_disconnected, "permit a disconnected graph");

    CLI::App* conjecture = app.add_subcommand("conjecture", "sweep the predicted optimum");
    conjecture->add_option("--max-n", max_n, "largest n, between 2 and 7");
    conjecture->add_flag("--json", json_mode, "JSON output");
    conjecture->add_option("--threads", threads, "thread count, 0 = all");

    CLI::App* blocks = app.add_subcommand("blocks", "block decomposition");
    blocks->add_option("graph", graphfile, "graph file, - for stdin")->required();
    blocks->add_option("--seed", seed, "class choice seed");
    blocks->add_flag("--json", json_mode, "JSON output");
    blocks->add_option("--threads", threads, "thread count, 0 = all");
    blocks->add_flag("--allow-disconnected", allow_disconnected,
                     "permit a disconnected graph");

    CLI::App* autos = app.add_subcommand("autos", "automorphism group by brute force");
    autos->add_option("graph", graphfile, "graph file, - for stdin")->required();
    autos->add_flag("--json", json_mode, "JSON output");

    CLI::App* paper = app.add_subcommand("paper-check", "run the acceptance criteria");
    paper->add_option("scope", scope, "all or a claim group s1..s4")
        ->check(CLI::IsMember({"all", "s1", "s2", "s3", "s4"}));
    paper->add_flag("--json", json_mode, "JSON output");
    paper->add_option("--threads", threads, "thread count, 0 = all");

    std::vector<const char*> argv;
    argv.push_back("gpe");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*gen) return cmd_gen(family, n, gen_n->count() > 0, out_path, out);
        if (*dist) {
            if (dist_u->count() != dist_v->count())
                throw precondition_error("query needs both u and v");
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_dist(g, threads, json_mode, qu, qv, dist_u->count() > 0, out);
        }
        if (*theta) {
            bool have_file = theta_graph->count() > 0;
            bool have_family = theta->get_option("--family")->count() > 0;
            if (have_file == have_family)
                throw precondition_error("theta needs a graph file or --family, not both");
            if (have_family) {
                Graph g = family_graph(family, n, theta_n->count() > 0);
                return cmd_theta(g, family, n, threads, json_mode, out);
            }
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_theta(g, "", 0, threads, json_mode, out);
        }
        if (*verify) {
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_verify(g, threads, maximal_flag, edges_path, in, out);
        }
        if (*maximal) {
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_maximal(g, threads, edges_path, seed, json_mode, in, out, err);
        }
        if (*solve) {
            bool have_file = solve->get_option("graph")->count() > 0;
            bool have_family = solve->get_option("--family")->count() > 0;
            if (have_file == have_family)
                throw precondition_error("solve needs a graph file or --family, not both");
            Graph g = have_family ? family_graph(family, n, solve_n->count() > 0)
                                  : graph_from_file(graphfile, in, allow_disconnected);
            return cmd_solve(g, threads, enumerate_all, bound_name, json_mode, out);
        }
        if (*conjecture) return cmd_conjecture(max_n, threads, json_mode, out);
        if (*blocks) {
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_blocks(g, threads, seed,
                              json_mode, out);
        }
        if (*autos) {
            Graph g = graph_from_file(graphfile, in, allow_disconnected);
            return cmd_autos(g, json_mode, out);
        }
        if (*paper) return cmd_paper_check(scope, threads, json_mode, out);
        throw internal_error("no subcommand dispatched");
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace gpe
