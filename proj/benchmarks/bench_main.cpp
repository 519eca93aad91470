#include "vinberg/cone.hpp"
#include "vinberg/engine.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace vinberg;

namespace {

QuadraticForm diag_form(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return QuadraticForm::diagonal(v);
}

void BM_EnumerateRoots(benchmark::State& state) {
    const auto f = diag_form({-7, 1, 1, 1});
    const ControlVector u0(f, default_control(f));
    const Integer a(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_roots_at(f, u0, Integer(2), a));
}
BENCHMARK(BM_EnumerateRoots)->Arg(2)->Arg(8)->Arg(32);

void BM_ExtremeRays(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> x(-5, 5);
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    std::vector<IntVector> cons;
    IntVector p(d, Integer(1));
    while (cons.size() < 2 * d) {
        IntVector c;
        for (std::size_t k = 0; k < d; ++k)
            c.emplace_back(x(rng));
        if (dot(c, p) < 0)
            cons.push_back(c);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(extreme_rays(d - 1, cons));
}
BENCHMARK(BM_ExtremeRays)->DenseRange(3, 6);

void BM_Run(benchmark::State& state, QuadraticForm f, unsigned threads) {
    const ControlVector u0(f, default_control(f));
    RunConfig c;
    c.facet_cap = 500;
    c.threads = threads;
    for (auto _ : state)
        benchmark::DoNotOptimize(run(f, u0, c));
}
BENCHMARK_CAPTURE(BM_Run, triangle, diag_form({-1, 1, 1}), 1);
BENCHMARK_CAPTURE(BM_Run, d3_unit, diag_form({-1, 1, 1, 1}), 1);
BENCHMARK_CAPTURE(BM_Run, d3_five, diag_form({-5, 1, 1, 1}), 1);
BENCHMARK_CAPTURE(BM_Run, d3_five_threads4, diag_form({-5, 1, 1, 1}), 4);
BENCHMARK_CAPTURE(BM_Run, d5_unit, diag_form({-1, 1, 1, 1, 1, 1}), 1);

} // namespace

BENCHMARK_MAIN();
