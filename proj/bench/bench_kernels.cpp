// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "vcapprox/geometry.hpp"
#include "vcapprox/is_oracles.hpp"
#include "vcapprox/nt_kernel.hpp"

using namespace vcapprox;

namespace {

ShapeSet disks(std::size_t n) {
    GenerateParams p;
    p.kind = ShapeKind::Disks;
    p.n = n;
    p.region = 10.0 * static_cast<double>(n) / 50.0 + 50.0;
    p.seed = 42;
    return generate_instance(p);
}

void intersection(benchmark::State& state, Parallelism mode) {
    const auto shapes = disks(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersection_graph(shapes, mode));
    }
    state.SetComplexityN(state.range(0));
}

void BM_IntersectionSerial(benchmark::State& state) { intersection(state, Parallelism::Serial); }
void BM_IntersectionOpenMP(benchmark::State& state) { intersection(state, Parallelism::OpenMP); }

void local_search(benchmark::State& state, SwapScan scan) {
    const auto g = intersection_graph(disks(static_cast<std::size_t>(state.range(0)))).graph;
    const auto kernel = kernelize(g).kernel_graph;
    LocalSearchOptions o;
    o.swap_size = 3;
    o.scan = scan;
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_search_is(kernel, o));
    }
    state.counters["kernel_n"] = static_cast<double>(kernel.size());
}

void BM_LocalSearchSerial(benchmark::State& state) { local_search(state, SwapScan::Serial); }
void BM_LocalSearchParallel(benchmark::State& state) { local_search(state, SwapScan::Parallel); }

void BM_Kernelize(benchmark::State& state) {
    const auto g = intersection_graph(disks(static_cast<std::size_t>(state.range(0)))).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernelize(g));
    }
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_IntersectionSerial)->RangeMultiplier(2)->Range(512, 8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionOpenMP)->RangeMultiplier(2)->Range(512, 8192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LocalSearchSerial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalSearchParallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(250, 4000)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
