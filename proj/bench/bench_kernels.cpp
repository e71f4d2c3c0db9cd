// SPDX-License-Identifier: Apache-2.0
//
// Serial against OpenMP grid kernels. Thread counts come from the benchmark
// argument; results are identical for all of them.
#include <benchmark/benchmark.h>

#include "stdce/kernels.hpp"

using namespace stdce;

namespace {

std::vector<SpectralPoint> spectral_points()
{
    std::vector<SpectralPoint> pts;
    for (int i = 1; i <= 16; ++i)
        pts.push_back({i / 17.0, 0.3, i % 2 ? Polarization::TE : Polarization::TM});
    return pts;
}

std::vector<DensityPoint> density_points()
{
    std::vector<DensityPoint> pts;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            pts.push_back({1.5 * i / 31.0, 6.2 * j / 31.0, 0.7, {0.3, 0.0}, Polarization::TM, 1});
    return pts;
}

void BM_spectral_serial(benchmark::State& s)
{
    const auto pts = spectral_points();
    for (auto _ : s)
        benchmark::DoNotOptimize(serial::spectral_grid(pts, {}));
}

void BM_spectral_omp(benchmark::State& s)
{
    set_thread_count(static_cast<int>(s.range(0)));
    const auto pts = spectral_points();
    for (auto _ : s)
        benchmark::DoNotOptimize(omp::spectral_grid(pts, {}));
}

void BM_density_serial(benchmark::State& s)
{
    const auto pts = density_points();
    for (auto _ : s)
        benchmark::DoNotOptimize(serial::density_grid(pts, {}));
}

void BM_density_omp(benchmark::State& s)
{
    set_thread_count(static_cast<int>(s.range(0)));
    const auto pts = density_points();
    for (auto _ : s)
        benchmark::DoNotOptimize(omp::density_grid(pts, {}));
}

void BM_spinning_serial(benchmark::State& s)
{
    SpinningOptions o;
    o.R = 3.0;
    const std::vector<double> u{0.2, 0.35, 0.5, 0.65};
    for (auto _ : s)
        benchmark::DoNotOptimize(serial::spinning_grid(u, -4, 4, 0, o));
}

void BM_spinning_omp(benchmark::State& s)
{
    set_thread_count(static_cast<int>(s.range(0)));
    SpinningOptions o;
    o.R = 3.0;
    const std::vector<double> u{0.2, 0.35, 0.5, 0.65};
    for (auto _ : s)
        benchmark::DoNotOptimize(omp::spinning_grid(u, -4, 4, 0, o));
}

void BM_af_serial(benchmark::State& s)
{
    const CubicLattice g{100, 100, 10, 0.5};
    for (auto _ : s)
        benchmark::DoNotOptimize(serial::af_sum({0.3, 0.7, 1.1}, g, {0.0, 0.0, 0.0}));
}

void BM_af_omp(benchmark::State& s)
{
    set_thread_count(static_cast<int>(s.range(0)));
    const CubicLattice g{100, 100, 10, 0.5};
    for (auto _ : s)
        benchmark::DoNotOptimize(omp::af_sum({0.3, 0.7, 1.1}, g, {0.0, 0.0, 0.0}));
}

}  // namespace

BENCHMARK(BM_spectral_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectral_omp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_density_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_density_omp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_spinning_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spinning_omp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_af_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_af_omp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
