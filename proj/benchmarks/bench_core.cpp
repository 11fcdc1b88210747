#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include <hyperbolic/grids.hpp>
#include <hyperbolic/specfun.hpp>
#include <hyperbolic/transform.hpp>

using namespace hyperbolic;

static void BM_SphericalFn(benchmark::State& state) {
    const ModelParams mp(static_cast<int>(state.range(0)));
    const double lambda = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(spherical_fn(lambda, 2.0, mp));
}
BENCHMARK(BM_SphericalFn)->Args({2, 4})->Args({2, 64})->Args({3, 4})->Args({3, 64});

static void BM_SphericalTable(benchmark::State& state) {
    const ModelParams mp(static_cast<int>(state.range(0)));
    const auto lg = make_spectral_grid(32.0, 8);
    const auto rg = make_radial_grid(8.0, 16);
    for (auto _ : state) benchmark::DoNotOptimize(SphericalTable(mp, lg.nodes, rg.nodes));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(lg.size() * rg.size()));
}
BENCHMARK(BM_SphericalTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ForwardTransform(benchmark::State& state) {
    const ModelParams mp(static_cast<int>(state.range(0)));
    const auto rg = make_radial_grid(8.0, 32);
    const auto f = RadialFunction::sample(rg, mp, [](double r) { return complex(std::exp(-r * r)); });
    const auto lg = make_spectral_grid(24.0, 48);
    for (auto _ : state) benchmark::DoNotOptimize(forward_radial_ft(f, lg));
}
BENCHMARK(BM_ForwardTransform)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_InverseTransform(benchmark::State& state) {
    const ModelParams mp(static_cast<int>(state.range(0)));
    const auto rg = make_radial_grid(8.0, 32);
    const auto f = RadialFunction::sample(rg, mp, [](double r) { return complex(std::exp(-r * r)); });
    const auto ft = forward_radial_ft(f, make_spectral_grid(24.0, 48));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_radial_ft(ft, rg));
}
BENCHMARK(BM_InverseTransform)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
