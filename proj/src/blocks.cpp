#include "gpe/blocks.hpp"

#include <algorithm>
#include <string>

#include "gpe/errors.hpp"
#include "gpe/gp.hpp"

namespace gpe {

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    std::vector<char> cut;
    std::vector<EdgeSet> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph), disc(graph.order(), 0), low(graph.order(), 0), cut(graph.order(), 0) {}

    void pop_block(int until_edge) {
        EdgeSet b(g.size());
        int e;
        do {
            e = edge_stack.back();
            edge_stack.pop_back();
            b.set(e);
        } while (e != until_edge);
        blocks.push_back(std::move(b));
    }

    void run(int root) {
        // Iterative lowpoint DFS; frames track the position in the adjacency
        // list so deep graphs cannot exhaust the call stack.
        struct Frame {
            int v, parent_edge;
            std::size_t next = 0;
        };
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = ++timer;
        int root_children = 0;

        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                auto [w, e] = nbrs[f.next++];
                if (e == f.parent_edge) continue;
                if (disc[w] == 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& pf = stack.back();
                low[pf.v] = std::min(low[pf.v], low[v]);
                if (pf.v == root) ++root_children;
                if (low[v] >= disc[pf.v]) {
                    if (pf.v != root) cut[pf.v] = 1;
                    pop_block(pe);
                }
            }
        }
        if (root_children >= 2) cut[root] = 1;
    }
};

} // namespace

bool BlockDecomposition::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_decomposition(const Graph& g) {
    if (!g.connected())
        throw precondition_error("block_decomposition: graph is disconnected");

    BlockDfs dfs(g);
    if (g.size() > 0) dfs.run(0);

    std::sort(dfs.blocks.begin(), dfs.blocks.end(),
              [](const EdgeSet& a, const EdgeSet& b) { return a.first() < b.first(); });

    BlockDecomposition r;
    r.blocks = std::move(dfs.blocks);
    for (int v = 0; v < g.order(); ++v)
        if (dfs.cut[v]) r.cut_vertices.push_back(v);

    for (int k = 0; k < static_cast<int>(r.blocks.size()); ++k) {
        std::vector<char> in_block(g.order(), 0);
        for (int e = r.blocks[k].first(); e >= 0; e = r.blocks[k].next(e + 1)) {
            auto [u, v] = g.edge(e);
            in_block[u] = in_block[v] = 1;
        }
        int cuts = 0;
        for (int v : r.cut_vertices) cuts += in_block[v];
        if (cuts <= 1) r.end_blocks.push_back(k);
    }
    return r;
}

EdgeSet end_block_gp_set(const Graph& g, const DistanceMatrix& d, const ThetaPartition& p,
                         const ClassSelector& choose) {
    if (!is_partial_cube(g, d))
        throw precondition_error("end_block_gp_set: graph is not a partial cube");

    BlockDecomposition blocks = block_decomposition(g);
    EdgeSet result(g.size());

    for (int ordinal = 0; ordinal < static_cast<int>(blocks.end_blocks.size()); ++ordinal) {
        const EdgeSet& block = blocks.blocks[blocks.end_blocks[ordinal]];
        std::vector<int> candidates;
        for (int k = 0; k < p.class_count(); ++k)
            if (p.classes[k].intersects(block)) candidates.push_back(k);

        int picked;
        if (choose) {
            picked = choose(ordinal, candidates);
            if (std::find(candidates.begin(), candidates.end(), picked) == candidates.end())
                throw precondition_error(
                    "end_block_gp_set: selector picked a class with no edge in the block");
        } else {
            picked = candidates.front();
            for (int k : candidates)
                if (p.classes[k].count() > p.classes[picked].count()) picked = k;
        }
        result |= p.classes[picked];
    }

    if (!is_edge_gp_set(g, d, result).is_gp)
        throw internal_error("end_block_gp_set: constructed set fails verification");
    return result;
}

bool cross_block_theta_check(const Graph& g, const DistanceMatrix& d,
                             const std::vector<int>& vertices) {
    std::vector<int> order_of(g.order(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order() || order_of[v] >= 0)
            throw precondition_error("cross_block_theta_check: bad vertex subset");
        order_of[v] = i;
    }

    // Induced subgraph, remembering which G-edge each H-edge came from.
    std::vector<std::pair<int, int>> h_edges;
    std::vector<int> g_edge_of;
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edge(e);
        if (order_of[u] >= 0 && order_of[v] >= 0) {
            h_edges.emplace_back(order_of[u], order_of[v]);
            g_edge_of.push_back(e);
        }
    }
    Graph h(static_cast<int>(vertices.size()), h_edges, {}, true);

    // Isometry: equality of distances pairwise (computed inside H by BFS).
    for (int i = 0; i < h.order(); ++i) {
        std::vector<int> dist(h.order(), -1);
        std::vector<int> queue{i};
        dist[i] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (auto [w, e] : h.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        for (int j = 0; j < h.order(); ++j)
            if (dist[j] != d(vertices[i], vertices[j]))
                throw precondition_error(
                    "cross_block_theta_check: subgraph not isometric at vertices " +
                    std::to_string(vertices[i]) + " and " + std::to_string(vertices[j]));
    }

    BlockDecomposition blocks = block_decomposition(h);

    std::vector<int> block_of(h.size(), -1);
    for (int k = 0; k < static_cast<int>(blocks.blocks.size()); ++k)
        for (int e = blocks.blocks[k].first(); e >= 0; e = blocks.blocks[k].next(e + 1))
            block_of[e] = k;

    for (int a = 0; a < h.size(); ++a)
        for (int b = a + 1; b < h.size(); ++b)
            if (block_of[a] != block_of[b] &&
                theta_related(d, g.edge(g_edge_of[a]), g.edge(g_edge_of[b])))
                return false;
    return true;
}

} // namespace gpe
