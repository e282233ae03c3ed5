// Serial reference step against the OpenMP kernel on the same inputs.

#include "gld/scheme.hpp"
#include "gld/verification.hpp"

#include <benchmark/benchmark.h>

namespace {

struct Setup {
    gld::ManufacturedProblem mp = gld::manufactured_problem("ex2d-iii");
    gld::ProblemData data = mp.data();
    gld::Grid grid;
    gld::SymTensorField z0, z1;
    gld::SchemeConfig cfg;

    Setup(int N, int p) {
        grid = gld::build_grid(2, mp.extent, {N, N}, p);
        cfg.p = p;
        cfg.dt = 0.1 / N;
        z0 = gld::sample_field(grid, [&](const gld::Point& x) { return data.exact(x, 0.0); });
        z1 = gld::sample_field(grid, [&](const gld::Point& x) { return data.exact(x, cfg.dt); });
    }
};

void run(benchmark::State& state, gld::ExecPolicy exec, int threads) {
    Setup s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    s.cfg.exec = exec;
    s.cfg.threads = threads;
    for (auto _ : state) {
        auto f = gld::model_general_step(s.z1, s.z0, s.data, s.cfg, 2.0 * s.cfg.dt);
        benchmark::DoNotOptimize(f);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.grid.size()));
}

void BM_reference(benchmark::State& st) { run(st, gld::ExecPolicy::SerialReference, 1); }
void BM_kernel_1thread(benchmark::State& st) { run(st, gld::ExecPolicy::Parallel, 1); }
void BM_kernel_parallel(benchmark::State& st) { run(st, gld::ExecPolicy::Parallel, 0); }

void sizes(benchmark::internal::Benchmark* b) {
    for (int p : {1, 2})
        for (int N : {40, 80, 160, 320}) b->Args({N, p});
}

}  // namespace

BENCHMARK(BM_reference)->Apply(sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_kernel_1thread)->Apply(sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_kernel_parallel)->Apply(sizes)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
