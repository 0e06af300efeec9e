#include <benchmark/benchmark.h>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/matchers.hpp"
#include "dbgmatch/random.hpp"
#include "dbgmatch/reduce_ham.hpp"
#include "dbgmatch/reduce_ov.hpp"

namespace {

using namespace dbgmatch;

// Random graph with about four out-edges per vertex.
LabeledDigraph sparse_graph(std::size_t n) {
    gen::Rng rng(n);
    return gen::random_graph(rng, n, 4, 4.0 / static_cast<double>(n));
}

void BM_PatternDp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const LabeledDigraph g = sparse_graph(n);
    gen::Rng rng(m);
    const Pattern p = gen::random_pattern(rng, m, 4);
    DpOptions opts;
    opts.witness = state.range(2) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_pattern_substitutions(g, p, opts));
    }
    state.counters["cells"] = benchmark::Counter(static_cast<double>((g.edge_count() + n) * m),
                                                 benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_PatternDp)
    ->ArgNames({"V", "m", "witness"})
    ->ArgsProduct({{256, 1024, 4096}, {64, 512}, {0, 1}});

void BM_SethDp(benchmark::State& state) {
    gen::Rng rng(7);
    const OvInstance ov = gen::random_ov(rng, static_cast<std::size_t>(state.range(0)), 6);
    const InstanceBundle b = ov::build_seth_instance(ov);
    DpOptions opts;
    opts.witness = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_pattern_substitutions(b.graph.base(), b.pattern, opts));
    }
    state.counters["E"] = static_cast<double>(b.graph.base().edge_count());
    state.counters["m"] = static_cast<double>(b.pattern.size());
}
BENCHMARK(BM_SethDp)->ArgName("N")->RangeMultiplier(2)->Range(2, 32);

void BM_GraphSearch(benchmark::State& state) {
    gen::Rng rng(11);
    const LabeledDigraph g = gen::random_graph(rng, 6, 3, 0.5);
    const Pattern p = gen::random_pattern(rng, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_graph_substitutions(g, p, p.size()));
    }
}
BENCHMARK(BM_GraphSearch)->ArgName("m")->DenseRange(4, 10, 2);

void BM_NpcEquivalence(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    }
    const InstanceBundle b = ham::build_npc_instance(HamInstance::from_edges(n, edges), {true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_graph_substitutions(b.graph.base(), b.pattern, b.delta));
    }
}
BENCHMARK(BM_NpcEquivalence)->ArgName("n")->DenseRange(3, 6);

void BM_Validate(benchmark::State& state) {
    const DeBruijnGraph g = full_de_bruijn(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_de_bruijn(g));
    }
}
BENCHMARK(BM_Validate)->ArgName("k")->DenseRange(2, 5);

} // namespace

BENCHMARK_MAIN();
