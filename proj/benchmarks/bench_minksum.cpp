#include <benchmark/benchmark.h>

#include "minksum/exactlp.hpp"
#include "minksum/formulas.hpp"
#include "minksum/master.hpp"
#include "minksum/repfn.hpp"
#include "minksum/skeleton.hpp"

namespace {

using namespace minksum;

void BM_MasterVertexCount(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const MasterFamily master = build_master(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_count(master.family()));
    }
}
BENCHMARK(BM_MasterVertexCount)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MultiplicityMapExample(benchmark::State& state) {
    const SimplexFamily fam(4, {{1, 2, 3}, {1, 2, 4}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiplicity_map(fam));
    }
}
BENCHMARK(BM_MultiplicityMapExample);

void BM_IsEdgeLpP3(benchmark::State& state) {
    const MasterFamily master = build_master(3);
    const std::vector<LatticePoint> verts = vertices(master.family());
    // A genuine edge: adjacent 3e_1 -> 2e_1 + e_5 differs by e_5 - e_1.
    const LatticePoint u = verts.front();
    LatticePoint v;
    for (const auto& w : verts) {
        int changed = 0;
        for (std::size_t t = 0; t < w.size(); ++t) changed += w[t] != u[t];
        if (changed == 2) {
            v = w;
            break;
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(exactlp::is_edge(u, v, verts));
    }
}
BENCHMARK(BM_IsEdgeLpP3)->Unit(benchmark::kMicrosecond);

void BM_SkeletonP3Lp(benchmark::State& state) {
    const MasterFamily master = build_master(3);
    SkeletonOptions opts;
    opts.certifier = EdgeCertifier::Lp;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_skeleton(master.family(), opts));
    }
}
BENCHMARK(BM_SkeletonP3Lp)->Unit(benchmark::kMillisecond);

void BM_SkeletonP3TightSets(benchmark::State& state) {
    const MasterFamily master = build_master(3);
    SkeletonOptions opts;
    opts.certifier = EdgeCertifier::TightSets;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_skeleton(master.family(), opts));
    }
}
BENCHMARK(BM_SkeletonP3TightSets)->Unit(benchmark::kMillisecond);

void BM_FVectorExample(benchmark::State& state) {
    const SimplexFamily fam(4, {{1, 2, 3}, {1, 2, 4}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_vector(fam));
    }
}
BENCHMARK(BM_FVectorExample);

void BM_OrderedPartitions(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ordered_partition_count(r));
    }
}
BENCHMARK(BM_OrderedPartitions)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MantelBrute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_mantel_brute(n, n / 2));
    }
}
BENCHMARK(BM_MantelBrute)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
