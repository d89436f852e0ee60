#include "preproj/tables.hpp"
#include "preproj/verify.hpp"

#include <benchmark/benchmark.h>

using namespace preproj;

static void BM_BuildAlgebra(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto alg = build_preprojective(double_quiver(make_type_t(n)));
        benchmark::DoNotOptimize(alg.dim());
    }
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Resolution(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto alg = build_preprojective(double_quiver(make_type_t(n)));
    auto fd = frobenius(alg);
    for (auto _ : state) {
        Resolution res(alg, fd, 13);
        benchmark::DoNotOptimize(check_exactness(res).exact);
    }
}
BENCHMARK(BM_Resolution)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_CohomologyRing(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto alg = build_preprojective(double_quiver(make_type_t(n)));
    auto fd = frobenius(alg);
    Resolution res(alg, fd, 13);
    for (auto _ : state) {
        CohomologyRing ring(res, 12);
        benchmark::DoNotOptimize(check_cup_theorem(ring).all());
    }
}
BENCHMARK(BM_CohomologyRing)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CalculusTables(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Workspace ws(QuiverKind::TypeT, n, 2);
        benchmark::DoNotOptimize(calculus_tables(ws.calculus(), 1).size());
    }
}
BENCHMARK(BM_CalculusTables)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
