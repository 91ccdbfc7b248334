#include <benchmark/benchmark.h>

#include <random>

#include "ccs/ccs_pipeline.hpp"
#include "ccs/covering_paths.hpp"
#include "ccs/polylog.hpp"

using namespace ccs;

static void BM_Li2(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0.0, 2.0);
    std::vector<cplx> z(256);
    for (auto& x : z) x = cplx(n(rng), n(rng));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(li2(z[k++ & 255]));
}
BENCHMARK(BM_Li2);

static void BM_Lhat(benchmark::State& state) {
    const CoveringPoint pt(cplx(0.3, 0.4), 2, -4);
    for (auto _ : state) benchmark::DoNotOptimize(lhat(pt));
}
BENCHMARK(BM_Lhat);

static void BM_RepairTorsion(benchmark::State& state) {
    const BarChain t = torsion_cycle(static_cast<int>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(repair_to_good(t, ++seed));
}
BENCHMARK(BM_RepairTorsion)->Arg(3)->Arg(5)->Arg(8);

static void BM_CcsValueTorsion(benchmark::State& state) {
    const BarChain t = torsion_cycle(static_cast<int>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(ccs_value(t, ++seed, 1));
}
BENCHMARK(BM_CcsValueTorsion)->Arg(3)->Arg(5)->Arg(8);

static void BM_LiftLoop(benchmark::State& state) {
    const BasePoint base = find_ft_plus_base();
    const ParamPath loop = composite_loop(base.x0, base.x1, {1, -2, 3, 0, 1});
    const LiftedFiveTuple start(base.x0, base.x1);
    for (auto _ : state) benchmark::DoNotOptimize(lift_path(loop, start));
}
BENCHMARK(BM_LiftLoop);

BENCHMARK_MAIN();
