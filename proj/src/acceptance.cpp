#include "gpe/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <sstream>

#include "gpe/automorphism.hpp"
#include "gpe/blocks.hpp"
#include "gpe/distance.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/numbers.hpp"
#include "gpe/random_graphs.hpp"
#include "gpe/reference.hpp"
#include "gpe/solver.hpp"
#include "gpe/theta.hpp"

namespace gpe {

namespace {

Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph complete_bipartite_2_3() {
    return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

bool crit_class_sizes(std::ostringstream& out, int) {
    for (int n = 1; n <= 12; ++n)
        if (!class_size_formula_check(CubeFamily::fibonacci, n)) {
            out << "fibonacci n=" << n << ": class sizes off the closed form";
            return false;
        }
    for (int n = 2; n <= 12; ++n)
        if (!class_size_formula_check(CubeFamily::lucas, n)) {
            out << "lucas n=" << n << ": class sizes off the closed form";
            return false;
        }
    out << "fibonacci n=1..12 and lucas n=2..12 match the closed forms";
    return true;
}

bool crit_best_pair(std::ostringstream& out, int threads) {
    for (int n = 2; n <= 12; ++n) {
        Graph g = fibonacci_cube(n);
        DistanceMatrix d = all_pairs_distances(g, threads);
        ClassPair pair = best_class_pair(theta_partition(g, d, threads));
        if (pair.combined != 2 * fibonacci(n)) {
            out << "fibonacci n=" << n << ": best pair " << pair.combined << ", expected "
                << 2 * fibonacci(n);
            return false;
        }
    }
    out << "fibonacci n=2..12: best class pair totals twice the n-th term";
    return true;
}

bool crit_pair_unions(std::ostringstream& out, int threads) {
    int pairs_checked = 0;
    auto all_pairs_gp = [&](const Graph& g, const std::string& name) {
        DistanceMatrix d = all_pairs_distances(g, threads);
        ThetaPartition p = theta_partition(g, d, threads);
        for (int i = 1; i <= p.class_count(); ++i)
            for (int j = i + 1; j <= p.class_count(); ++j) {
                if (!class_pair_is_gp(g, d, p, i, j)) {
                    out << name << ": classes " << i << "," << j
                        << " not in general position";
                    return false;
                }
                ++pairs_checked;
            }
        return true;
    };
    for (int n = 2; n <= 7; ++n) {
        if (!all_pairs_gp(fibonacci_cube(n), "fibonacci n=" + std::to_string(n))) return false;
        if (!all_pairs_gp(lucas_cube(n), "lucas n=" + std::to_string(n))) return false;
    }
    for (int r = 2; r <= 4; ++r)
        if (!all_pairs_gp(hypercube(r), "hypercube r=" + std::to_string(r))) return false;
    for (int r = 2; r <= 6; ++r)
        if (!all_pairs_gp(grid(r), "grid r=" + std::to_string(r))) return false;
    out << pairs_checked << " class pair unions verified";
    return true;
}

bool crit_maximality(std::ostringstream& out, int threads) {
    auto first_last_maximal = [&](const Graph& g, int n, const std::string& name) {
        DistanceMatrix d = all_pairs_distances(g, threads);
        ThetaPartition p = theta_partition(g, d, threads);
        int a = -1, b = -1;
        for (int k = 0; k < p.class_count(); ++k) {
            if (p.coordinates[k] == 1) a = k;
            if (p.coordinates[k] == n) b = k;
        }
        EdgeSet x = p.classes[a];
        x |= p.classes[b];
        if (!is_maximal_edge_gp_set(g, d, x)) {
            out << name << ": union of coordinate classes 1 and " << n << " not maximal";
            return false;
        }
        return true;
    };
    for (int n = 2; n <= 8; ++n)
        if (!first_last_maximal(fibonacci_cube(n), n, "fibonacci n=" + std::to_string(n)))
            return false;
    for (int n = 4; n <= 8; ++n)
        if (!first_last_maximal(lucas_cube(n), n, "lucas n=" + std::to_string(n)))
            return false;
    out << "first+last coordinate class union maximal on fibonacci n=2..8, lucas n=4..8";
    return true;
}

bool crit_exact_values(std::ostringstream& out, int) {
    struct Instance {
        std::string name;
        Graph g;
        int expected;
        int threads;
    };
    // The two-vertex cube has one edge, so its optimum is 1, not the 2 the
    // doubling pattern of the larger cubes would suggest.
    std::vector<Instance> instances;
    instances.push_back({"fibonacci(5)", fibonacci_cube(5), 10, 1});
    instances.push_back({"lucas(5)", lucas_cube(5), 7, 1});
    instances.push_back({"hypercube(1)", hypercube(1), 1, 1});
    instances.push_back({"hypercube(2)", hypercube(2), 4, 1});
    instances.push_back({"hypercube(3)", hypercube(3), 8, 1});
    instances.push_back({"hypercube(4)", hypercube(4), 16, 4});
    instances.push_back({"grid(4)", grid(4), 8, 1});
    instances.push_back({"grid(5)", grid(5), 12, 1});
    instances.push_back({"fig3", fig3_graph(), 8, 1});

    for (const Instance& inst : instances) {
        DistanceMatrix d = all_pairs_distances(inst.g, inst.threads);
        SolveOptions opt;
        opt.threads = inst.threads;
        SolveResult r = solve_gp_e(inst.g, d, opt);
        if (r.optimum != inst.expected) {
            out << inst.name << ": optimum " << r.optimum << ", expected " << inst.expected;
            return false;
        }
        if (r.witnesses.size() != 1 || r.witnesses[0].count() != r.optimum ||
            !is_edge_gp_set(inst.g, d, r.witnesses[0]).is_gp) {
            out << inst.name << ": witness does not check out";
            return false;
        }
        if (r.seconds > 300.0) {
            out << inst.name << ": solved in " << r.seconds << " s, over the 300 s budget";
            return false;
        }
        out << inst.name << "=" << r.optimum << " ";
    }
    out << "(witnesses re-verified)";
    return true;
}

bool crit_sweep(std::ostringstream& out, int threads) {
    std::vector<ConjectureRow> rows = conjecture_sweep(6, threads);
    for (const ConjectureRow& row : rows) {
        if (row.n <= 5 && row.optimum != row.predicted) {
            out << "n=" << row.n << ": optimum " << row.optimum << " != predicted "
                << row.predicted;
            return false;
        }
        if (row.optimum < row.predicted) {
            out << "n=" << row.n << ": optimum " << row.optimum
                << " below the construction bound " << row.predicted;
            return false;
        }
    }
    const ConjectureRow& last = rows.back();
    out << "n=2..5 EQUAL; n=6 ";
    if (last.optimum == last.predicted)
        out << "EQUAL";
    else
        out << "GREATER (" << last.optimum << " vs " << last.predicted
            << "): recorded as a finding, not a failure";
    return true;
}

bool crit_uniqueness(std::ostringstream& out, int threads) {
    Graph g = lucas_cube(5);
    DistanceMatrix d = all_pairs_distances(g, threads);
    SolveOptions opt;
    opt.enumerate_all = true;
    opt.threads = 1;
    SolveResult r = solve_gp_e(g, d, opt);
    if (r.optimum != 7) {
        out << "lucas n=5: optimum " << r.optimum << ", expected 7";
        return false;
    }
    std::vector<std::vector<int>> autos = automorphisms(g, d);
    int orbits = orbit_count(g, r.witnesses, autos);
    if (orbits != 1) {
        out << "lucas n=5: " << r.witnesses.size() << " maximum sets fall into " << orbits
            << " orbits, expected 1";
        return false;
    }
    out << r.witnesses.size() << " maximum sets, " << autos.size()
        << " automorphisms, one orbit";
    return true;
}

bool crit_oracles(std::ostringstream& out, int) {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (int r = 1; r <= 3; ++r)
        graphs.emplace_back("hypercube r=" + std::to_string(r), hypercube(r));
    for (int n = 1; n <= 4; ++n)
        graphs.emplace_back("fibonacci n=" + std::to_string(n), fibonacci_cube(n));
    for (int n = 1; n <= 5; ++n)
        graphs.emplace_back("lucas n=" + std::to_string(n), lucas_cube(n));
    for (int r = 2; r <= 3; ++r)
        graphs.emplace_back("grid r=" + std::to_string(r), grid(r));
    graphs.emplace_back("fig3", fig3_graph());
    for (int s = 0; s < 200; ++s)
        graphs.emplace_back("random seed=" + std::to_string(s),
                            random_connected_bipartite(2 + s % 11, s));

    long long triples_checked = 0;
    int instances_solved = 0;
    for (const auto& [name, g] : graphs) {
        DistanceMatrix d = all_pairs_distances(g, 1);
        std::vector<std::array<int, 3>> oracle = reference::conflicting_triples(g, d);
        std::set<std::array<int, 3>> expected(oracle.begin(), oracle.end());
        int m = g.size();
        for (int e = 0; e < m; ++e)
            for (int f = e + 1; f < m; ++f)
                for (int h = f + 1; h < m; ++h) {
                    bool fast = triple_on_common_geodesic(g, d, e, f, h).has_value();
                    bool slow = expected.count({e, f, h}) > 0;
                    if (fast != slow) {
                        out << name << ": triple " << e << "," << f << "," << h
                            << " criterion says " << fast << ", enumeration says " << slow;
                        return false;
                    }
                    ++triples_checked;
                }
        if (m <= 18) {
            int by_subsets = reference::max_gp_size_by_subsets(g, d);
            SolveOptions opt;
            opt.threads = 1;
            SolveResult r = solve_gp_e(g, d, opt);
            if (r.optimum != by_subsets) {
                out << name << ": solver " << r.optimum << ", subset scan " << by_subsets;
                return false;
            }
            if (!r.witnesses.empty() &&
                !reference::is_edge_gp_set_by_enumeration(g, d, r.witnesses[0])) {
                out << name << ": solver witness fails geodesic enumeration";
                return false;
            }
            ++instances_solved;
        }
    }
    out << graphs.size() << " graphs, " << triples_checked << " triples cross-checked, "
        << instances_solved << " optima matched against the subset scan";
    return true;
}

bool crit_recognition(std::ostringstream& out, int threads) {
    auto check = [&](const Graph& g, bool expected, const std::string& name) {
        DistanceMatrix d = all_pairs_distances(g, threads);
        if (is_partial_cube(g, d) != expected) {
            out << name << ": expected " << (expected ? "a partial cube" : "no partial cube");
            return false;
        }
        return true;
    };
    for (int n = 1; n <= 8; ++n) {
        if (!check(fibonacci_cube(n), true, "fibonacci n=" + std::to_string(n))) return false;
        if (!check(lucas_cube(n), true, "lucas n=" + std::to_string(n))) return false;
    }
    for (int r = 1; r <= 4; ++r)
        if (!check(hypercube(r), true, "hypercube r=" + std::to_string(r))) return false;
    for (int r = 2; r <= 6; ++r)
        if (!check(grid(r), true, "grid r=" + std::to_string(r))) return false;
    if (!check(cycle_graph(6), true, "6-cycle")) return false;
    if (!check(fig3_graph(), true, "fig3")) return false;
    if (!check(cycle_graph(5), false, "5-cycle")) return false;
    if (!check(complete_bipartite_2_3(), false, "complete bipartite 2x3")) return false;
    out << "recognized all cube families, grids, the 6-cycle and fig3; rejected the 5-cycle "
           "and complete bipartite 2x3";
    return true;
}

bool crit_blocks(std::ostringstream& out, int threads) {
    std::mt19937_64 selector_rng(12345);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_cube_cactus(seed);
        DistanceMatrix d = all_pairs_distances(g, threads);
        ThetaPartition p = theta_partition(g, d, threads);
        ClassSelector pick = [&](int, std::span<const int> candidates) {
            return (int)candidates[rand_below(selector_rng, candidates.size())];
        };
        EdgeSet x = end_block_gp_set(g, d, p, pick);
        if (!is_edge_gp_set(g, d, x).is_gp) {
            out << "cactus seed=" << seed << ": construction not in general position";
            return false;
        }
        std::vector<int> everything(g.order());
        std::iota(everything.begin(), everything.end(), 0);
        if (!cross_block_theta_check(g, d, everything)) {
            out << "cactus seed=" << seed << ": related edges across blocks";
            return false;
        }
    }
    out << "50 cactus graphs: end block construction holds, no relations across blocks";
    return true;
}

bool crit_inequality(std::ostringstream& out, int) {
    int checked = 0;
    for (int n = 1; n <= 30; ++n)
        for (int i = 0; i <= n / 2; ++i) {
            if (!product_inequality_holds(n, i)) {
                out << "n=" << n << " i=" << i << ": inequality fails";
                return false;
            }
            ++checked;
        }
    out << checked << " (n, i) pairs hold";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    bool (*fn)(std::ostringstream&, int);
};

const Criterion kCriteria[] = {
    {1, "theta class sizes match the closed form", 10.0, crit_class_sizes},
    {2, "best class pair totals", 1.0, crit_best_pair},
    {3, "class pair unions are in general position", 60.0, crit_pair_unions},
    {4, "first and last class union is maximal", 60.0, crit_maximality},
    {5, "exact optima on the named instances", 2700.0, crit_exact_values},
    {6, "fibonacci sweep against the predicted optimum", 1800.0, crit_sweep},
    {7, "small lucas optimum unique up to symmetry", 60.0, crit_uniqueness},
    {8, "oracle equivalence on named and random graphs", 600.0, crit_oracles},
    {9, "partial cube recognition", 10.0, crit_recognition},
    {10, "end block construction and cross block independence", 60.0, crit_blocks},
    {11, "product inequality", 1.0, crit_inequality},
};

} // namespace

std::vector<int> criterion_ids() {
    std::vector<int> ids;
    for (const Criterion& c : kCriteria) ids.push_back(c.id);
    return ids;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int threads) {
    std::vector<CriterionResult> results;
    for (const Criterion& c : kCriteria) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
        std::ostringstream detail;
        auto started = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.fn(detail, threads);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (pass && seconds > c.budget) {
            pass = false;
            detail << " (took " << seconds << " s, budget " << c.budget << " s)";
        }
        results.push_back({c.id, c.name, pass, detail.str(), seconds});
    }
    return results;
}

} // namespace gpe
