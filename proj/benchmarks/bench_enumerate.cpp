#include <benchmark/benchmark.h>

#include "trusslab/enumerate.hpp"

using namespace trusslab;

namespace {

void BM_EnumerateNaive(benchmark::State& state) {
    GroupTable g = cyclic_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_naive(g, 1).value().total_found);
}
BENCHMARK(BM_EnumerateNaive)->Arg(2)->Arg(3);

void BM_EnumerateStructured(benchmark::State& state) {
    GroupTable g = state.range(0) == 6 ? symmetric3()
                 : state.range(0) == 5 ? klein_four()
                                       : cyclic_group(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_structured(g, jobs).value().total_found);
}
BENCHMARK(BM_EnumerateStructured)->Args({4, 1})->Args({5, 1})->Args({6, 1})->Args({6, 4});

void BM_Classify(benchmark::State& state) {
    auto res = enumerate_structured(klein_four(), 1).value();
    for (auto _ : state) {
        EnumerationResult copy = res;
        benchmark::DoNotOptimize(classify(std::move(copy), IsoNotion::HeapSemigroup).heap_semigroup->class_count);
    }
}
BENCHMARK(BM_Classify);

}  // namespace
