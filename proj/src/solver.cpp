#include "gpe/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <string>
#include <utility>

#include "gpe/cover.hpp"
#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/numbers.hpp"
#include "gpe/theta.hpp"

namespace gpe {

namespace {

/// Everything the search reads but never writes.
struct Tables {
    int m = 0;
    std::vector<EdgeSet> pairconf;   ///< [e*m+f]: edges closing a conflicting triple with e, f
    std::vector<int> ord;            ///< branch order: decreasing conflict degree, then index
    std::vector<EdgeSet> pos_suffix; ///< edges at branch positions >= i
    std::vector<EdgeSet> id_suffix;  ///< edges with index >= i
    std::vector<int> path_of;        ///< cover path owning each edge (cover bound only)
    std::vector<EdgeSet> path_edges; ///< edges owned by each cover path
    int paths = 0;
};

Tables build_tables(const Graph& g, const DistanceMatrix& d, BoundMode bound) {
    int m = g.size();
    Tables t;
    t.m = m;
    t.pairconf.assign(m * m, EdgeSet(m));
    std::vector<long long> degree(m, 0);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            for (int h = f + 1; h < m; ++h) {
                if (!triple_on_common_geodesic(g, d, e, f, h)) continue;
                t.pairconf[e * m + f].set(h);
                t.pairconf[f * m + e].set(h);
                t.pairconf[e * m + h].set(f);
                t.pairconf[h * m + e].set(f);
                t.pairconf[f * m + h].set(e);
                t.pairconf[h * m + f].set(e);
                ++degree[e];
                ++degree[f];
                ++degree[h];
            }

    t.ord.resize(m);
    for (int e = 0; e < m; ++e) t.ord[e] = e;
    std::stable_sort(t.ord.begin(), t.ord.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    t.pos_suffix.assign(m + 1, EdgeSet(m));
    t.id_suffix.assign(m + 1, EdgeSet(m));
    for (int i = m - 1; i >= 0; --i) {
        t.pos_suffix[i] = t.pos_suffix[i + 1];
        t.pos_suffix[i].set(t.ord[i]);
        t.id_suffix[i] = t.id_suffix[i + 1];
        t.id_suffix[i].set(i);
    }

    if (bound == BoundMode::cover && m > 0) {
        GeodesicCover cover = greedy_geodesic_cover(g, d);
        t.paths = (int)cover.paths.size();
        t.path_of.assign(m, -1);
        t.path_edges.assign(t.paths, EdgeSet(m));
        for (int p = 0; p < t.paths; ++p)
            for (std::size_t i = 0; i + 1 < cover.paths[p].size(); ++i) {
                int e = g.edge_index(cover.paths[p][i], cover.paths[p][i + 1]);
                if (t.path_of[e] == -1) { // first covering path owns the edge
                    t.path_of[e] = p;
                    t.path_edges[p].set(e);
                }
            }
    }
    return t;
}

struct BoundScratch {
    EdgeSet avail, on;
};

/// Upper bound on edges still addable when positions >= i (in the order the
/// suffix array encodes) remain and `ban` lists the excluded ones.
int upper_bound(const Tables& t, BoundMode mode, const std::vector<EdgeSet>& suffix, int i,
                const EdgeSet& ban, const std::vector<int>& cnt, BoundScratch& s) {
    if (mode == BoundMode::none) return t.m - i;
    s.avail = suffix[i];
    s.avail.subtract(ban);
    if (mode == BoundMode::counting) return s.avail.count();
    int total = 0;
    for (int p = 0; p < t.paths; ++p) {
        int room = 2 - cnt[p];
        if (room <= 0) continue;
        s.on = t.path_edges[p];
        s.on &= s.avail;
        total += std::min(s.on.count(), room);
    }
    return total;
}

struct Ctx {
    const Tables& t;
    BoundMode mode;
    bool enumerate_all;
    std::atomic<int> best;
    std::atomic<long long> nodes{0};
    std::vector<std::vector<EdgeSet>> found; ///< per thread slot
};

struct Worker {
    Ctx& c;
    const Tables& t;
    int slot;
    std::vector<EdgeSet> banned; ///< indexed by chosen count
    std::vector<int> chosen;
    std::vector<int> cnt; ///< chosen edges per cover path
    BoundScratch scratch;
    long long local_nodes = 0;

    Worker(Ctx& ctx, int slot)
        : c(ctx), t(ctx.t), slot(slot), banned(t.m + 1, EdgeSet(t.m)), chosen(t.m, 0),
          cnt(t.paths, 0) {}

    bool viable(int have, int more) {
        int b = c.best.load(std::memory_order_relaxed);
        return c.enumerate_all ? have + more >= b : have + more > b;
    }

    void reached(int v) {
        int cur = c.best.load(std::memory_order_relaxed);
        while (v > cur && !c.best.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
        }
        if (c.enumerate_all && v >= c.best.load(std::memory_order_relaxed)) {
            EdgeSet s(t.m);
            for (int j = 0; j < v; ++j) s.set(chosen[j]);
            c.found[slot].push_back(std::move(s));
        }
    }

    /// Plants edge ord[i] into the state for chosen count k. Returns the
    /// bound for the subtree below.
    int plant(int i, int k) {
        int e = t.ord[i];
        banned[k + 1] = banned[k];
        for (int j = 0; j < k; ++j) banned[k + 1] |= t.pairconf[e * t.m + chosen[j]];
        chosen[k] = e;
        if (t.paths) ++cnt[t.path_of[e]];
        reached(k + 1);
        return upper_bound(t, c.mode, t.pos_suffix, i + 1, banned[k + 1], cnt, scratch);
    }

    void unplant(int i) {
        if (t.paths) --cnt[t.path_of[t.ord[i]]];
    }

    void dfs(int i, int k) {
        ++local_nodes;
        if (i == t.m) return;
        if (!banned[k].test(t.ord[i])) {
            int ub = plant(i, k);
            if (viable(k + 1, ub)) dfs(i + 1, k + 1);
            unplant(i);
        }
        if (viable(k, upper_bound(t, c.mode, t.pos_suffix, i + 1, banned[k], cnt, scratch)))
            dfs(i + 1, k);
    }
};

/// Search state parked between the serial frontier expansion and the
/// parallel phase.
struct Node {
    int i = 0, k = 0;
    std::vector<int> chosen;
    EdgeSet banned;
    std::vector<int> cnt;
};

/// Breadth-first include-first expansion until the frontier can feed every
/// thread. Runs the same pruning as the dfs, so the root may be solved
/// outright, leaving an empty frontier.
std::vector<Node> expand_frontier(Ctx& c, Worker& w, int target) {
    const Tables& t = c.t;
    std::deque<Node> queue;
    queue.push_back({0, 0, {}, EdgeSet(t.m), std::vector<int>(t.paths, 0)});
    while (!queue.empty() && (int)queue.size() < target) {
        Node nd = std::move(queue.front());
        queue.pop_front();
        ++c.nodes;
        if (nd.i == t.m) continue;

        w.banned[nd.k] = nd.banned;
        std::copy(nd.chosen.begin(), nd.chosen.end(), w.chosen.begin());
        w.cnt = nd.cnt;

        if (!nd.banned.test(t.ord[nd.i])) {
            int ub = w.plant(nd.i, nd.k);
            if (w.viable(nd.k + 1, ub)) {
                Node child{nd.i + 1, nd.k + 1, nd.chosen, w.banned[nd.k + 1], w.cnt};
                child.chosen.push_back(t.ord[nd.i]);
                queue.push_back(std::move(child));
            }
            w.unplant(nd.i);
        }
        if (w.viable(nd.k, upper_bound(t, c.mode, t.pos_suffix, nd.i + 1, nd.banned, nd.cnt,
                                       w.scratch)))
            queue.push_back({nd.i + 1, nd.k, std::move(nd.chosen), std::move(nd.banned),
                             std::move(nd.cnt)});
    }
    return {std::make_move_iterator(queue.begin()), std::make_move_iterator(queue.end())};
}

/// Include-first walk in plain edge index order, stopping at the first set
/// of the target size: the lexicographically smallest maximum set.
struct Extractor {
    const Tables& t;
    BoundMode mode;
    int target;
    std::vector<EdgeSet> banned;
    std::vector<int> chosen;
    std::vector<int> cnt;
    BoundScratch scratch;
    long long nodes = 0;

    Extractor(const Tables& tables, BoundMode mode, int target)
        : t(tables), mode(mode), target(target), banned(t.m + 1, EdgeSet(t.m)),
          chosen(t.m, 0), cnt(t.paths, 0) {}

    bool extract(int e, int k) {
        ++nodes;
        if (k == target) return true;
        if (e == t.m) return false;
        if (!banned[k].test(e)) {
            banned[k + 1] = banned[k];
            for (int j = 0; j < k; ++j) banned[k + 1] |= t.pairconf[e * t.m + chosen[j]];
            chosen[k] = e;
            if (t.paths) ++cnt[t.path_of[e]];
            bool fits =
                k + 1 + upper_bound(t, mode, t.id_suffix, e + 1, banned[k + 1], cnt, scratch) >=
                target;
            if (fits && extract(e + 1, k + 1)) return true;
            if (t.paths) --cnt[t.path_of[e]];
        }
        if (k + upper_bound(t, mode, t.id_suffix, e + 1, banned[k], cnt, scratch) >= target)
            return extract(e + 1, k);
        return false;
    }
};

/// Largest verified general position set made of two relation classes, or 0.
int class_pair_seed(const Graph& g, const DistanceMatrix& d) {
    if (!is_partial_cube(g, d)) return 0;
    ThetaPartition part = theta_partition(g, d);
    if (part.class_count() < 2) return 0;
    ClassPair pair = best_class_pair(part);
    EdgeSet candidate = part.classes[pair.i - 1];
    candidate |= part.classes[pair.j - 1];
    if (!is_edge_gp_set(g, d, candidate).is_gp) return 0;
    return candidate.count();
}

} // namespace

SolveResult solve_gp_e(const Graph& g, const DistanceMatrix& d, const SolveOptions& opt) {
    auto started = std::chrono::steady_clock::now();
    int m = g.size();
    if (m > opt.max_edges)
        throw precondition_error("solve_gp_e: " + std::to_string(m) + " edges, limit is " +
                                 std::to_string(opt.max_edges) +
                                 " (raise max_edges to search anyway)");

    SolveResult result;
    if (m == 0) {
        if (opt.want_witnesses) result.witnesses.push_back(EdgeSet(0));
        return result;
    }

    Tables t = build_tables(g, d, opt.bound);
    int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();

    Ctx ctx{t, opt.bound, opt.enumerate_all,
            std::max(std::min(m, 2), class_pair_seed(g, d)),
            {},
            std::vector<std::vector<EdgeSet>>(nthreads)};

    if (nthreads == 1) {
        Worker w(ctx, 0);
        w.dfs(0, 0);
        ctx.nodes += w.local_nodes;
    } else {
        Worker scratch_worker(ctx, 0);
        std::vector<Node> tasks = expand_frontier(ctx, scratch_worker, 8 * nthreads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
        for (int idx = 0; idx < (int)tasks.size(); ++idx) {
            Worker w(ctx, omp_get_thread_num());
            const Node& nd = tasks[idx];
            w.banned[nd.k] = nd.banned;
            std::copy(nd.chosen.begin(), nd.chosen.end(), w.chosen.begin());
            w.cnt = nd.cnt;
            w.dfs(nd.i, nd.k);
            ctx.nodes += w.local_nodes;
        }
    }

    result.optimum = ctx.best.load();
    result.nodes_explored = ctx.nodes.load();

    if (opt.want_witnesses) {
        if (opt.enumerate_all) {
            for (auto& per_thread : ctx.found)
                for (auto& s : per_thread)
                    if (s.count() == result.optimum) result.witnesses.push_back(std::move(s));
            std::sort(result.witnesses.begin(), result.witnesses.end(), EdgeSet::canonical_less);
        } else {
            Extractor ex(t, opt.bound, result.optimum);
            if (!ex.extract(0, 0))
                throw internal_error("solve_gp_e: witness extraction missed the optimum");
            EdgeSet witness(m);
            for (int j = 0; j < result.optimum; ++j) witness.set(ex.chosen[j]);
            result.witnesses.push_back(std::move(witness));
            result.nodes_explored += ex.nodes;
        }
    }

    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                         .count();
    return result;
}

std::vector<ConjectureRow> conjecture_sweep(int max_n, int threads) {
    if (max_n < 2 || max_n > 7)
        throw precondition_error("conjecture_sweep: max_n must be in [2, 7]");
    std::vector<ConjectureRow> rows;
    for (int n = 2; n <= max_n; ++n) {
        Graph g = fibonacci_cube(n);
        DistanceMatrix d = all_pairs_distances(g, threads);
        SolveOptions opt;
        opt.threads = threads;
        opt.want_witnesses = false;
        opt.max_edges = 128; // covers the 71 edges at n = 7
        SolveResult r = solve_gp_e(g, d, opt);
        long long predicted = 2 * static_cast<long long>(fibonacci(n));
        rows.push_back({n, r.optimum, predicted, r.nodes_explored, r.seconds});
    }
    return rows;
}

} // namespace gpe
