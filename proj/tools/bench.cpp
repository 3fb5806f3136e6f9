// Compares the parallel sweeps against the serial reference implementation.
//
//   zsp-bench [s p] [--budget B]
//
// The oracle is single-threaded by design; the partition/graph kernels use
// OpenMP when available.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zsp/graph.hpp"
#include "zsp/oracle.hpp"
#include "zsp/partition.hpp"

using namespace zsp;

namespace {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int t) {
#ifdef _OPENMP
    omp_set_num_threads(t);
#else
    (void)t;
#endif
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    u64 s = 1999, p = 4999;  // N just under the default budget
    u64 budget = kDefaultBudget;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--budget" && i + 1 < argc) {
            budget = std::stoull(argv[++i]);
        } else if (s == 1999 && arg[0] != '-') {
            s = std::stoull(arg);
            if (i + 1 < argc) p = std::stoull(argv[++i]);
        }
    }

    RingContext ctx;
    try {
        ctx = build_context(s, p);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::printf("N = %llu, threads available: %d\n", static_cast<unsigned long long>(ctx.N),
                max_threads());

    volatile u64 sink = 0;

    double t_oracle = time_ms([&] {
        u64 acc = 0;
        for (u64 w = 0; w < ctx.N; ++w) acc += static_cast<u64>(oracle::brute_classify(w, s, p));
        sink = acc;
    });
    std::printf("classification sweep, serial reference : %10.1f ms\n", t_oracle);

    set_threads(1);
    double t_one = time_ms([&] { sink = class_counts(ctx, budget)[0]; });
    std::printf("classification sweep, kernel x1 thread  : %10.1f ms\n", t_one);

    set_threads(max_threads());
    double t_par = time_ms([&] { sink = class_counts(ctx, budget)[0]; });
    std::printf("classification sweep, kernel x%d threads : %10.1f ms  (%.2fx vs serial ref)\n",
                max_threads(), t_par, t_oracle / t_par);

    double t_bgraph = time_ms([&] { sink = oracle::brute_graph(ctx.N, budget).cycles.size(); });
    std::printf("graph build, serial reference           : %10.1f ms\n", t_bgraph);

    double t_graph = time_ms([&] { sink = build_graph(full_ring(ctx, budget), ctx, budget).cycles.size(); });
    std::printf("graph build, library                    : %10.1f ms\n", t_graph);

    (void)sink;
    return 0;
}
