#include <benchmark/benchmark.h>

#include "blockrat/aaa.hpp"
#include "blockrat/block_aaa.hpp"
#include "blockrat/linearize.hpp"
#include "blockrat/loewner.hpp"
#include "blockrat/problems.hpp"
#include "blockrat/rkfit.hpp"
#include "blockrat/vecfit.hpp"

using namespace blockrat;

namespace {

const SampleSet& buckling() {
    static const SampleSet samples = problem_buckling().samples;
    return samples;
}

AaaOptions to_order(benchmark::State& state) {
    AaaOptions o;
    o.max_order = static_cast<std::size_t>(state.range(0));
    return o;
}

void BM_BlockAaa(benchmark::State& state) {
    const AaaOptions o = to_order(state);
    for (auto _ : state) { benchmark::DoNotOptimize(block_aaa(buckling(), o)); }
}
BENCHMARK(BM_BlockAaa)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SetValuedAaa(benchmark::State& state) {
    const AaaOptions o = to_order(state);
    for (auto _ : state) { benchmark::DoNotOptimize(set_valued_aaa(buckling(), o)); }
}
BENCHMARK(BM_SetValuedAaa)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SurrogateAaa(benchmark::State& state) {
    const AaaOptions o = to_order(state);
    for (auto _ : state) { benchmark::DoNotOptimize(surrogate_aaa(buckling(), 1, o)); }
}
BENCHMARK(BM_SurrogateAaa)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

// Order 10, varying the number of relocation sweeps.
void BM_VectorFitting(benchmark::State& state) {
    VfOptions o;
    o.iterations = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) { benchmark::DoNotOptimize(vf_matrix(buckling(), 10, o)); }
}
BENCHMARK(BM_VectorFitting)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Rkfit(benchmark::State& state) {
    RkfitOptions o;
    o.degree = 10;
    o.iterations = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) { benchmark::DoNotOptimize(rkfit_fit(buckling(), o)); }
}
BENCHMARK(BM_Rkfit)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Loewner(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) { benchmark::DoNotOptimize(loewner_block(buckling(), d)); }
}
BENCHMARK(BM_Loewner)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_NonlinearEigs(benchmark::State& state) {
    AaaOptions o;
    o.max_order = static_cast<std::size_t>(state.range(0));
    const BlockBaryC model = to_bary_c(block_aaa(buckling(), o).model);
    for (auto _ : state) { benchmark::DoNotOptimize(nonlinear_eigs_bary_c(model)); }
}
BENCHMARK(BM_NonlinearEigs)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
