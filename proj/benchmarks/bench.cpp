#include <benchmark/benchmark.h>

#include <adicamata/adicamata.hpp>

using namespace adicamata;

namespace {

const Pipeline& pipeline() {
    static Pipeline p = build_pipeline();
    return p;
}

void BM_BuildPipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_pipeline());
}
BENCHMARK(BM_BuildPipeline);

void BM_ComposeShiftAdic(benchmark::State& state) {
    const Pipeline& p = pipeline();
    for (auto _ : state) benchmark::DoNotOptimize(compose(p.shift, compose(p.adic, p.adic)));
}
BENCHMARK(BM_ComposeShiftAdic);

void BM_BaumslagSolitar(benchmark::State& state) {
    const Pipeline& p = pipeline();
    for (auto _ : state) benchmark::DoNotOptimize(check_baumslag_solitar(p.adic, p.shift));
}
BENCHMARK(BM_BaumslagSolitar);

void BM_ProjectionLanguageEqual(benchmark::State& state) {
    const Pipeline& p = pipeline();
    for (auto _ : state)
        benchmark::DoNotOptimize(language_equal(input_projection(p.adic), p.path_automaton));
}
BENCHMARK(BM_ProjectionLanguageEqual);

void BM_NucleusCheck(benchmark::State& state) {
    const Pipeline& p = pipeline();
    for (auto _ : state) benchmark::DoNotOptimize(check_nuclear(p.nucleus, p.adic, 2));
}
BENCHMARK(BM_NucleusCheck);

void BM_LambdaSystem(benchmark::State& state) {
    const Pipeline& p = pipeline();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y));
}
BENCHMARK(BM_LambdaSystem);

void BM_LambdaEmptiness(benchmark::State& state) {
    const Pipeline& p = pipeline();
    LambdaSystem sys = make_lambda_system(p.path_automaton, p.adic, p.base_x, p.base_y);
    IntegerAutomaton neg_x_d = ia_negate(build_lambda_automaton(sys, 'x', "d"));
    IntegerAutomaton y_e = build_lambda_automaton(sys, 'y', "e");
    for (auto _ : state) benchmark::DoNotOptimize(ia_empty(ia_intersect(neg_x_d, y_e)));
}
BENCHMARK(BM_LambdaEmptiness);

void BM_SmithNormalForm(benchmark::State& state) {
    IntMatrix m = mat_pow(adjacency_matrix(pipeline().path_automaton), 4);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_OrbitStep(benchmark::State& state) {
    const Pipeline& p = pipeline();
    PathWord z = p.base_x;
    for (auto _ : state) {
        z = apply_path(p.adic, p.path_automaton, z);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_OrbitStep);

}  // namespace

BENCHMARK_MAIN();
