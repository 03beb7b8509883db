#include <benchmark/benchmark.h>

#include "laygraph/cnf.hpp"
#include "laygraph/search.hpp"

namespace {

using namespace laygraph;

void BM_BuildGkl(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TwoTree tree = build_gkl({k, 3});
        benchmark::DoNotOptimize(tree.graph().edge_count());
    }
}
BENCHMARK(BM_BuildGkl)->Arg(3)->Arg(4)->Arg(5);

void BM_SolveTwoStack(benchmark::State& state) {
    TwoTree tree = build_gkl({static_cast<int>(state.range(0)), 3});
    for (auto _ : state) {
        SolveResult r = solve(tree.graph(), {2, 0});
        benchmark::DoNotOptimize(r.status);
    }
}
BENCHMARK(BM_SolveTwoStack)->Arg(2)->Arg(3);

void BM_EnumerateMixed(benchmark::State& state) {
    TwoTree tree = build_gkl({2, 3});
    for (auto _ : state) {
        auto count = count_layouts(tree.graph(), {1, 1});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateMixed);

void BM_EncodeCnf(benchmark::State& state) {
    TwoTree tree = build_gkl({static_cast<int>(state.range(0)), 3});
    for (auto _ : state) {
        Cnf cnf = encode(tree.graph(), {1, 1});
        benchmark::DoNotOptimize(cnf.clauses.size());
    }
}
BENCHMARK(BM_EncodeCnf)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
