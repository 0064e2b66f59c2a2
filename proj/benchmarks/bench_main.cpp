#include "quadcross/bracket.hpp"
#include "quadcross/constructions.hpp"
#include "quadcross/moves.hpp"
#include "quadcross/random_diagrams.hpp"

#include <benchmark/benchmark.h>

using namespace quadcross;

static void BM_bracket_twist_chain(benchmark::State& state) {
    const Diagram d = twist_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_bracket_twist_chain)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

static void BM_bracket_resolved_quad(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Diagram d = random_quad_diagram(static_cast<int>(state.range(0)), rng).resolve();
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_bracket_resolved_quad)->Arg(2)->Arg(3);

static void BM_quad_bracket(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Diagram d = random_quad_diagram(static_cast<int>(state.range(0)), rng);
    const SkeinTable& t = skein_table();
    for (auto _ : state) benchmark::DoNotOptimize(quad_bracket(d, t));
}
BENCHMARK(BM_quad_bracket)->Arg(2)->Arg(3)->Arg(4);

static void BM_derive_skein_table(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(derive_skein_table());
}
BENCHMARK(BM_derive_skein_table);

static void BM_set_decompose(benchmark::State& state) {
    const Diagram d = two_bridge({3, 2, 2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(set_decompose(d));
}
BENCHMARK(BM_set_decompose);

static void BM_covering_circle(benchmark::State& state) {
    const Diagram d = two_bridge({4, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(find_even_covering_circle(d));
}
BENCHMARK(BM_covering_circle);

static void BM_random_quad_diagram(benchmark::State& state) {
    std::mt19937_64 rng(11);
    for (auto _ : state) benchmark::DoNotOptimize(random_quad_diagram(3, rng));
}
BENCHMARK(BM_random_quad_diagram);

BENCHMARK_MAIN();
