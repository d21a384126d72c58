// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------
//
// OpenMP kernels against their serial twins. Set OMP_NUM_THREADS to compare
// thread counts.

#include "dib/experiments/sweep.hpp"
#include "dib/numerics/maxmin.hpp"
#include "dib/numerics/random.hpp"
#include "dib/schemes/mmse.hpp"
#include "dib/schemes/qci.hpp"
#include "dib/schemes/tci.hpp"

#include <benchmark/benchmark.h>

using namespace dib;

namespace {

const SystemConfig kConfig{1e-4, 10.0, 10.0};

Allocation random_allocation(int cells)
{
    RandomSource rng(3);
    Allocation c{std::vector<double>(cells), std::vector<double>(cells)};
    for (auto &row : c)
        for (int j = 0; j + 1 < cells; ++j)
            row[j] = 12.0 * rng.uniform();
    return c;
}

template <bool Parallel>
void BM_CellRates(benchmark::State &state)
{
    const int cells = static_cast<int>(state.range(0));
    const QuantizationGrid grid = build_grid(cells, kConfig);
    const Allocation c = random_allocation(cells);
    const SolverSettings s;
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? cell_rates(grid, c, s) : cell_rates_serial(grid, c, s));
}

template <bool Parallel>
void BM_JointTerm(benchmark::State &state)
{
    SolverSettings s;
    s.mc_samples = state.range(0);
    const MmseCalibration cal = calibrate(kConfig, s);
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? joint_term(cal, kConfig, s)
                                          : joint_term_serial(cal, kConfig, s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_TciBest(benchmark::State &state)
{
    const SolverSettings s;
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? tci_best(kConfig, s) : tci_best_serial(kConfig, s));
}

void BM_GridOracle(benchmark::State &state)
{
    SolverSettings s;
    s.grid_points = static_cast<int>(state.range(0));
    const MaxMinProblem p{{40.0, 25.0}, {6.0, 8.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(maxmin_grid_oracle(p, s));
}

// The same lattice through the general objective, one point at a time.
void BM_LatticeDirect(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const MaxMinProblem p{{40.0, 25.0}, {6.0, 8.0}};
    for (auto _ : state)
    {
        double best = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
            {
                const std::array<double, 2> r{p.budgets[0] * i / (n - 1),
                                              p.budgets[1] * j / (n - 1)};
                best = std::max(best, maxmin_objective(p, r));
            }
        benchmark::DoNotOptimize(best);
    }
}

template <bool Parallel>
void BM_Sweep(benchmark::State &state)
{
    SweepSpec spec;
    spec.mode = SweepMode::snr_sweep;
    spec.snr_db_range = {0.0, 60.0, 10.0};
    spec.settings.mc_samples = 100'000;
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? evaluate_sweep(spec) : evaluate_sweep_serial(spec));
}

} // namespace

BENCHMARK(BM_CellRates<false>)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CellRates<true>)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_JointTerm<false>)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JointTerm<true>)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TciBest<false>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TciBest<true>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridOracle)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeDirect)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<false>)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_Sweep<true>)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
