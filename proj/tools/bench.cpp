// Benchmark: OpenMP kernels against their serial reference implementations
// (claw scan, solution-graph adjacency, isolated-path counting).

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "spr/generators.hpp"
#include "spr/isolated.hpp"
#include "spr/oracle.hpp"
#include "spr/recognition.hpp"
#include "spr/reduction.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace spr;
using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
              << parallel_ms << " ms   x" << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel entry points run serially\n";
#endif
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel" << "\n";

    {
        // Claw-free input forces the exhaustive triple scan.
        auto g = line_graph(gen_random_graph(60, 0.5, 42));
        std::optional<Claw> a, b;
        double ts = time_ms([&] { a = find_claw_serial(g); });
        double tp = time_ms([&] { b = find_claw(g); });
        if (a != b) std::cerr << "MISMATCH in find_claw\n";
        report("find_claw, line graph", ts, tp);
    }
    {
        auto strand = gen_main_strand(6);
        auto lay = compute_layering(strand.graph, strand.s, strand.t);
        auto paths = enumerate_shortest_paths(strand.graph, lay, 10000);
        SolutionGraph a, b;
        double ts = time_ms([&] { a = build_solution_graph_serial(paths); });
        double tp = time_ms([&] { b = build_solution_graph(paths); });
        if (a.adj != b.adj) std::cerr << "MISMATCH in build_solution_graph\n";
        report("solution graph, 4096 paths", ts, tp);
    }
    {
        // Wide layered graph: every vertex lies on a shortest st-path, so
        // the counting recurrence visits all of it.
        constexpr int kWidth = 120, kDepth = 50;
        Graph g(2 + kWidth * kDepth);
        std::mt19937_64 rng(7);
        std::bernoulli_distribution coin(0.5);
        auto id = [&](int layer, int slot) { return 1 + layer * kWidth + slot; };
        for (int a = 0; a < kWidth; ++a) {
            g.add_edge(0, id(0, a));
            g.add_edge(id(kDepth - 1, a), 1 + kWidth * kDepth);
        }
        for (int layer = 0; layer + 1 < kDepth; ++layer)
            for (int a = 0; a < kWidth; ++a) {
                g.add_edge(id(layer, a), id(layer + 1, a));
                for (int b = 0; b < kWidth; ++b)
                    if (b != a && coin(rng)) g.add_edge(id(layer, a), id(layer + 1, b));
            }
        auto lay = compute_layering(g, 0, 1 + kWidth * kDepth);
        BigInt a, b;
        double ts = time_ms([&] { a = count_isolated_serial(g, lay); });
        double tp = time_ms([&] { b = count_isolated(g, lay); });
        if (a != b) std::cerr << "MISMATCH in count_isolated\n";
        report("count_isolated 120x50 grid", ts, tp);
    }
    return 0;
}
