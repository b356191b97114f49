#include <benchmark/benchmark.h>

#include "trusslab/hopf.hpp"
#include "trusslab/ybe.hpp"

using namespace trusslab;

namespace {

SkewTruss s3_brace() {
    auto g = symmetric3();
    return build_truss(g, g.op, Side::Left).value();
}

void BM_SolutionFromTruss(benchmark::State& state) {
    SkewTruss t = s3_brace();
    for (auto _ : state) benchmark::DoNotOptimize(solution_from_truss(t, 0, 1).value().n);
}
BENCHMARK(BM_SolutionFromTruss);

void BM_BraidVerify(benchmark::State& state) {
    YBMap r = solution_from_truss(s3_brace(), 0, 1).value();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_ybe(r, jobs).ok);
    state.SetItemsProcessed(state.iterations() * r.n * r.n * r.n);
}
BENCHMARK(BM_BraidVerify)->Arg(1)->Arg(4);

void BM_HopfAxioms(benchmark::State& state) {
    auto g = cyclic_group(4);
    SkewTruss t = build_truss(g, MagmaTable::from_fn(4, [](Elem a, Elem b) { return (a + b + 2) % 4; }),
                              Side::Left)
                      .value();
    LinearizedTruss h = linearize(t);
    const int trials = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_truss_axioms(h, trials, 1).all());
}
BENCHMARK(BM_HopfAxioms)->Arg(0)->Arg(10);

void BM_RationalBilinear(benchmark::State& state) {
    LinearizedTruss h = linearize(s3_brace());
    RVec x(6), y(6);
    for (int i = 0; i < 6; ++i) {
        x[static_cast<std::size_t>(i)] = make_rational(i + 1, 7);
        y[static_cast<std::size_t>(i)] = make_rational(5 - i, 9);
    }
    for (auto _ : state) benchmark::DoNotOptimize(apply_bilinear(h.circ, x, y));
}
BENCHMARK(BM_RationalBilinear);

}  // namespace
