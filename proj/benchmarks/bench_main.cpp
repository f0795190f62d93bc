#include "hd/oracle.hpp"
#include "hd/spectra.hpp"
#include "hd/spinor.hpp"

#include <benchmark/benchmark.h>

namespace {

hd::ModelParams spin_params(double delta)
{
    hd::ModelParams p;
    p.symmetry = hd::Symmetry::Spin;
    p.screening = delta;
    p.symmetry_constant = 4.9;
    return p;
}

void BM_ClosedFormEnergy(benchmark::State& state)
{
    const hd::ModelParams p = spin_params(0.1);
    const hd::SchemeConfig scheme = state.range(0) ? hd::SchemeConfig::proper_r1() : hd::SchemeConfig::improved();
    int n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hd::solve_energy(p, {n, 2}, scheme));
        n = (n + 1) % 8;
    }
}
BENCHMARK(BM_ClosedFormEnergy)->Arg(0)->Arg(1);

// 8 rows x 4 deltas x 2 schemes, the size of one spin table.
void BM_TableSweep(benchmark::State& state)
{
    for (auto _ : state) {
        for (int row = 0; row < 8; ++row)
            for (double d : {0.025, 0.1, 0.175, 0.25})
                for (auto scheme : {hd::SchemeConfig::improved(), hd::SchemeConfig::proper_r1()})
                    benchmark::DoNotOptimize(
                        hd::solve_energy(spin_params(d), {row % 2, 1 + row / 2}, scheme));
    }
}
BENCHMARK(BM_TableSweep);

void BM_Shoot(benchmark::State& state)
{
    const hd::ModelParams p = spin_params(0.1);
    const hd::QuantumState s{static_cast<int>(state.range(0)), 2};
    const double e = hd::solve_energy(p, s, hd::SchemeConfig::improved()).rule_energy();
    const hd::OdeSpec spec = hd::build_ode(p, s, hd::OdeMode::SchemeR2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hd::shoot_eigenvalue(spec, s.n, e - 0.05, e + 0.05));
}
BENCHMARK(BM_Shoot)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildSpinor(benchmark::State& state)
{
    const hd::ModelParams p = spin_params(0.1);
    const hd::QuantumState s{1, 2};
    const hd::SchemeConfig scheme = state.range(0) ? hd::SchemeConfig::proper_r1() : hd::SchemeConfig::improved();
    const double e = hd::solve_energy(p, s, scheme).rule_energy();
    for (auto _ : state)
        benchmark::DoNotOptimize(hd::build_spinor(p, s, e, scheme));
}
BENCHMARK(BM_BuildSpinor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
