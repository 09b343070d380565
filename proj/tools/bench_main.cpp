#include <chrono>
#include <cstdio>

#include "gpe/distance.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/reference.hpp"
#include "gpe/solver.hpp"
#include "gpe/theta.hpp"

using namespace gpe;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* task, double serial, double parallel, bool agree) {
    std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", task, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "match" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-34s %10s %10s %7s\n", "task", "serial", "parallel", "speedup");

    {
        Graph g = fibonacci_cube(17);
        auto t0 = std::chrono::steady_clock::now();
        DistanceMatrix serial = reference::all_pairs_distances_bfs(g);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        DistanceMatrix parallel = all_pairs_distances(g, 0);
        double tp = seconds_since(t0);
        bool agree = true;
        for (int u = 0; u < g.order() && agree; ++u)
            for (int v = 0; v < g.order(); ++v)
                if (serial(u, v) != parallel(u, v)) {
                    agree = false;
                    break;
                }
        row("all pairs distances, fibonacci 17", ts, tp, agree);
    }

    {
        Graph g = fibonacci_cube(15);
        DistanceMatrix d = all_pairs_distances(g, 0);
        auto t0 = std::chrono::steady_clock::now();
        ThetaPartition one = theta_partition(g, d, 1);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        ThetaPartition many = theta_partition(g, d, 0);
        double tp = seconds_since(t0);
        bool agree = one.classes == many.classes && one.coordinates == many.coordinates;
        row("relation classes, fibonacci 15", ts, tp, agree);
    }

    {
        Graph g = fibonacci_cube(12);
        DistanceMatrix d = all_pairs_distances(g, 0);
        ThetaPartition p = theta_partition(g, d, 0);
        EdgeSet x = p.classes.front();
        x |= p.classes.back();
        auto t0 = std::chrono::steady_clock::now();
        GpVerdict serial = reference::gp_scan(g, d, x);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        GpVerdict parallel = is_edge_gp_set(g, d, x, 0);
        double tp = seconds_since(t0);
        row("triple scan, fibonacci 12 pair", ts, tp, serial.is_gp == parallel.is_gp);
    }

    {
        Graph g = fibonacci_cube(6);
        DistanceMatrix d = all_pairs_distances(g, 0);
        SolveOptions opt;
        opt.threads = 1;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult one = solve_gp_e(g, d, opt);
        double ts = seconds_since(t0);
        opt.threads = 4;
        t0 = std::chrono::steady_clock::now();
        SolveResult four = solve_gp_e(g, d, opt);
        double tp = seconds_since(t0);
        row("exact solve, fibonacci 6", ts, tp, one.optimum == four.optimum);
    }

    return 0;
}
