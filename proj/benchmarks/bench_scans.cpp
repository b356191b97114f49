#include <benchmark/benchmark.h>

#include "trusslab/truss.hpp"

using namespace trusslab;

namespace {

GroupTable make_group(int n) {
    if (n == 6) return symmetric3();
    if (n == 8) return dihedral_group(4);
    return cyclic_group(n);
}

void BM_AssociativityScan(benchmark::State& state) {
    GroupTable g = make_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(validate_semigroup(g.op).ok);
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_AssociativityScan)->Arg(4)->Arg(6)->Arg(8)->Arg(16);

void BM_TrussLawScan(benchmark::State& state) {
    GroupTable g = make_group(static_cast<int>(state.range(0)));
    const int n = g.size();
    MagmaTable circ = MagmaTable::from_fn(n, [&](Elem a, Elem b) { return g.mul(a, b); });
    std::vector<Elem> sigma = derive_sigma(g, circ, Side::Left);
    for (auto _ : state) benchmark::DoNotOptimize(check_left_truss_law(g, circ, sigma).ok);
    state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_TrussLawScan)->Arg(4)->Arg(6)->Arg(8)->Arg(16);

void BM_EquivalentForms(benchmark::State& state) {
    GroupTable g = make_group(static_cast<int>(state.range(0)));
    SkewTruss t = build_truss(g, g.op, Side::Left).value();
    for (auto _ : state) benchmark::DoNotOptimize(check_equivalent_forms(t).all());
}
BENCHMARK(BM_EquivalentForms)->Arg(4)->Arg(6)->Arg(8);

void BM_HeapAxioms(benchmark::State& state) {
    GroupTable g = make_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_heap_axioms(g).ok);
}
BENCHMARK(BM_HeapAxioms)->Arg(4)->Arg(8);

}  // namespace
