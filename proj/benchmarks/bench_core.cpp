// bench_core.cpp — microbenchmarks for the step maps, orbit runners,
// closed-form extraction, grid verification, and matrix construction.
#include "collatz/analysis.hpp"
#include "collatz/matrix.hpp"
#include "collatz/trajectory.hpp"
#include "collatz/verify.hpp"

#include <benchmark/benchmark.h>

using namespace collatz;

namespace {

void BM_StepT(benchmark::State& state) {
    Int cur = 27;
    for (auto _ : state) {
        cur = (cur == 1) ? Int(27) : t_step(cur);
        benchmark::DoNotOptimize(cur);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StepT);

void BM_StepFamily(benchmark::State& state) {
    const MapParam p{3};
    Int cur = 34;
    for (auto _ : state) {
        cur = (cur == p.anchor()) ? Int(34) : f_step(p, cur);
        benchmark::DoNotOptimize(cur);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StepFamily);

void BM_StepTBig(benchmark::State& state) {
    const Int start = (Int(1) << 1000) + 1;
    const Int floor_value = Int(1) << 500;
    Int cur = start;
    for (auto _ : state) {
        cur = (cur < floor_value) ? start : t_step(cur);
        benchmark::DoNotOptimize(cur);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StepTBig);

void BM_Iterate70(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate(Map::collatz(), Int(27), 70));
    }
    state.SetItemsProcessed(state.iterations() * 70);
}
BENCHMARK(BM_Iterate70);

void BM_RunUntilWithCycleDetection(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_until(Map::collatz(), Int(27), 100000));
    }
    state.SetItemsProcessed(state.iterations() * 70);
}
BENCHMARK(BM_RunUntilWithCycleDetection);

void BM_ClosedForm64(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form(Map::collatz(), Int(27), 64));
    }
}
BENCHMARK(BM_ClosedForm64);

void BM_CoeffTable64(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficient_table(Map::collatz(), Int(27), 64));
    }
}
BENCHMARK(BM_CoeffTable64);

void BM_VerifyConjugacyGrid(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_conjugacy(IntRange{1, 100}, IntRange{-5, 5}, 32, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100 * 11 * 33);
}
BENCHMARK(BM_VerifyConjugacyGrid);

void BM_VerifyReach(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_reach(MapParam{0}, Int(1000), 10000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 1001);
}
BENCHMARK(BM_VerifyReach);

void BM_BuildSymbolicMatrix(benchmark::State& state) {
    const Int top = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            build_matrix(MatrixMode::Symbolic, 0, top, static_cast<std::uint32_t>(32)));
    }
}
BENCHMARK(BM_BuildSymbolicMatrix)->Arg(16)->Arg(64)->Arg(256);

void BM_ChromaticEquivalence(benchmark::State& state) {
    const std::vector<Int> samples = {-2, -1, 0, 1, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_chromatic_equivalence(16, 6, samples));
    }
}
BENCHMARK(BM_ChromaticEquivalence);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
