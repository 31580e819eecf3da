#include <benchmark/benchmark.h>

#include "gforge/subdivision_system.hpp"
#include "gforge/verify.hpp"

namespace {

using namespace gforge;

SubdivisionSystem k4_system(int n) {
    FiniteGroup g = make_cyclic(4);
    return build_subdivision_system(g, check_genset(g, {1, 2, 3}), n);
}

void BM_BuildSystemK4(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(k4_system(n));
    }
}
BENCHMARK(BM_BuildSystemK4)->Arg(1)->Arg(2);

void BM_NormalForm(benchmark::State& state) {
    SubdivisionSystem sys = k4_system(1);
    std::vector<Word> words;
    std::uint64_t s = 1;
    for (int i = 0; i < 64; ++i) {
        Word w;
        for (int j = 0; j < 16; ++j) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            w.push_back(sys.system.alphabet().at(static_cast<int>(s % sys.system.alphabet().size())));
        }
        words.push_back(std::move(w));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(words[i++ % words.size()], sys.system));
    }
}
BENCHMARK(BM_NormalForm);

void BM_ConfluenceSweep(benchmark::State& state) {
    SubdivisionSystem sys = k4_system(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_confluence_bounded(sys.system, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ConfluenceSweep)->Arg(4)->Arg(5);

void BM_CayleyBall(benchmark::State& state) {
    SubdivisionSystem sys = k4_system(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cayley_ball(sys.system, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CayleyBall)->Arg(4)->Arg(5);

void BM_IsGeodeticSubdividedK6(benchmark::State& state) {
    FiniteGroup s3 = make_symmetric3();
    LabeledGraph graph = subdivide(cayley_graph(s3, check_genset(s3, {1, 2, 3, 4, 5})), 1).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_geodetic(graph));
    }
}
BENCHMARK(BM_IsGeodeticSubdividedK6);

} // namespace

BENCHMARK_MAIN();
