// Microbenchmarks for the hot paths: kernel evaluations, the contour
// integral, product-spectrum extraction, and the dense eigensolve.

#include "rmtlab/additive.hpp"
#include "rmtlab/kernels_analytic.hpp"
#include "rmtlab/kernels_finite.hpp"
#include "rmtlab/multiplicative.hpp"
#include "rmtlab/rng.hpp"
#include "rmtlab/sampling.hpp"
#include "rmtlab/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace rmtlab;

static void BM_KernelKw(benchmark::State& state) {
    const double w = state.range(0) / 100.0;
    double xi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_Kw(xi, 0.3, w));
        xi += 1e-3;
    }
}
BENCHMARK(BM_KernelKw)->Arg(25)->Arg(100)->Arg(500);

static void BM_KernelKhat(benchmark::State& state) {
    const double w = state.range(0) / 100.0;
    double xi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_Khat_scaled(xi, 0.3, w));
        xi += 1e-3;
    }
}
BENCHMARK(BM_KernelKhat)->Arg(25)->Arg(100)->Arg(200)->Arg(500);

static void BM_Erfi(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(erfi(std::complex<double>{2.0 + x, 3.0}));
        x += 1e-6;
    }
}
BENCHMARK(BM_Erfi);

static void BM_GjIntegral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(G_j(0.0, (n + 1) / 2, n, n));
}
BENCHMARK(BM_GjIntegral)->Arg(4)->Arg(16)->Arg(32);

static void BM_ProductQr(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProductConfig cfg;
    cfg.n = n;
    cfg.m = 16;
    std::uint64_t stream = 0;
    for (auto _ : state) {
        RngStream rng(1, stream++);
        benchmark::DoNotOptimize(product_spectrum_qr(cfg, rng));
    }
}
BENCHMARK(BM_ProductQr)->Arg(8)->Arg(32)->Arg(64);

static void BM_Eigensolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(2, 0);
    const auto h = sample_gue(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_Eigensolve)->Arg(64)->Arg(255);

BENCHMARK_MAIN();
