#include <benchmark/benchmark.h>

#include "mosaic/bijection.hpp"
#include "mosaic/dperm.hpp"
#include "mosaic/gentree.hpp"

namespace {

void BM_CountByLevel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mosaic::count_by_level(dim, n));
    }
}
BENCHMARK(BM_CountByLevel)->Args({2, 10})->Args({3, 8})->Args({4, 6})->Args({5, 5});

void BM_CountByLevelWorkers(benchmark::State& state) {
    mosaic::EnumerationLimits limits;
    limits.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mosaic::count_by_level(3, 8, limits));
    }
}
BENCHMARK(BM_CountByLevelWorkers)->Arg(1)->Arg(2)->Arg(4);

void BM_Rewrite(benchmark::State& state) {
    const mosaic::Label root = mosaic::Label::root(static_cast<int>(state.range(0)));
    // a mid-tree label with some shadowing going on
    mosaic::Label lab = mosaic::rewrite(root, root.vectors[0]);
    lab = mosaic::rewrite(lab, lab.vectors[1]);
    lab = mosaic::rewrite(lab, lab.vectors[2]);
    for (auto _ : state) {
        for (const mosaic::RankVector& v : lab.vectors)
            benchmark::DoNotOptimize(mosaic::rewrite(lab, v));
    }
}
BENCHMARK(BM_Rewrite)->Arg(3)->Arg(5);

void BM_EnumerateFloorplans(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mosaic::enumerate_floorplans(2, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_EnumerateFloorplans)->Arg(5)->Arg(6);

void BM_RoundTrip(benchmark::State& state) {
    const auto plans = mosaic::enumerate_floorplans(4, 4);
    for (auto _ : state) {
        for (const mosaic::Floorplan& fp : plans)
            benchmark::DoNotOptimize(mosaic::roundtrip_check(fp));
    }
}
BENCHMARK(BM_RoundTrip);

void BM_IsInF(benchmark::State& state) {
    const mosaic::DPermutation p = mosaic::DPermutation{3, {{0, 1, 3, 2, 4}, {2, 3, 0, 1, 4}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mosaic::is_in_F(p));
    }
}
BENCHMARK(BM_IsInF);

}  // namespace
