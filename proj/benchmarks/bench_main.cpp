#include <benchmark/benchmark.h>

#include "lshull/admm.hpp"
#include "lshull/field.hpp"
#include "lshull/hull.hpp"
#include "lshull/io.hpp"
#include "lshull/sdf.hpp"
#include "lshull/spectral.hpp"

namespace {

lshull::BinaryMask disk_mask(int size, double radius) {
    lshull::BinaryMask mask(size, size);
    const double cx = size / 2.0, cy = size / 2.0;
    for (int n = 0; n < size; ++n)
        for (int m = 0; m < size; ++m)
            if ((m - cx) * (m - cx) + (n - cy) * (n - cy) <= radius * radius)
                mask(m, n) = 1;
    return mask;
}

lshull::ScalarField random_field(int size, std::uint64_t seed) {
    lshull::ScalarField f(size, size);
    lshull::Xorshift64Star rng(seed);
    for (double& v : f.data())
        v = static_cast<double>(rng.next()) / 1.8446744073709552e19 - 0.5;
    return f;
}

void BM_SpectralSolve(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const lshull::SpectralPlan plan(size, size, 1.0, 15.0);
    const lshull::ScalarField g = random_field(size, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(plan.solve_biharmonic_split(g));
}
BENCHMARK(BM_SpectralSolve)->Arg(128)->Arg(256);

void BM_PeriodicEdt(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto mask = disk_mask(size, size / 4.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(lshull::periodic_edt(mask));
}
BENCHMARK(BM_PeriodicEdt)->Arg(128)->Arg(256);

void BM_Quickhull(benchmark::State& state) {
    const auto mask = disk_mask(256, 100.0);
    const auto pts = lshull::mask_points(mask);
    for (auto _ : state)
        benchmark::DoNotOptimize(lshull::quickhull(pts));
}
BENCHMARK(BM_Quickhull);

void BM_AdmmIteration(benchmark::State& state) {
    const int size = 128;
    const auto mask = disk_mask(size, 30.0);
    auto cfg = lshull::SolverConfig::exact_defaults();
    cfg.max_iter = 1; // cost of a single sweep
    cfg.tol = 1e-30;
    const auto init = lshull::init_polygon_exact(mask, 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            lshull::run_exact(mask, init.landmarks, cfg, init.phi0));
}
BENCHMARK(BM_AdmmIteration);

} // namespace

BENCHMARK_MAIN();
