#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dbgmatch/error.hpp"
#include "dbgmatch/oracles.hpp"
#include "dbgmatch/random.hpp"
#include "helpers.hpp"

using namespace dbgmatch;
using dbgmatch::test::make_graph;
using dbgmatch::test::make_pattern;

namespace {

bool is_cycle(const HamInstance& g, const std::vector<VertexId>& cycle) {
    if (cycle.size() != g.n()) {
        return false;
    }
    std::vector<VertexId> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.graph.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
            return false;
        }
    }
    return true;
}

HamInstance permuted(const HamInstance& g, const std::vector<VertexId>& perm) {
    std::vector<Edge> edges;
    for (const auto& [t, h] : g.graph.edges()) {
        edges.emplace_back(perm[t], perm[h]);
    }
    return HamInstance::from_edges(g.n(), edges);
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("hamiltonian oracle") {
    const HamInstance tri = HamInstance::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto yes = oracle::hamiltonian(tri);
    CHECK(yes.hamiltonian);
    CHECK(is_cycle(tri, yes.cycle));

    CHECK_FALSE(oracle::hamiltonian(HamInstance::from_edges(3, {{0, 1}, {1, 2}})).hamiltonian);

    const HamInstance bridged = HamInstance::from_edges(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
    CHECK_FALSE(oracle::hamiltonian(bridged).hamiltonian);

    CHECK_THROWS_AS(oracle::hamiltonian(HamInstance::from_edges(13, {})), Error);
}

TEST_CASE("hamiltonian oracle ignores vertex order") {
    gen::Rng rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        const HamInstance g = gen::random_ham(rng, {.n = 6});
        std::vector<VertexId> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const HamInstance h = permuted(g, perm);
        const auto a = oracle::hamiltonian(g);
        const auto b = oracle::hamiltonian(h);
        CHECK(a.hamiltonian == b.hamiltonian);
        if (b.hamiltonian) {
            CHECK(is_cycle(h, b.cycle));
        }
    }
}

TEST_CASE("orthogonal vectors oracle") {
    const OvInstance yes{2, {{1, 0}, {0, 1}}, {{1, 1}, {1, 0}}};
    const auto answer = oracle::orthogonal_vectors(yes);
    CHECK(answer.orthogonal);
    REQUIRE(answer.witness);
    CHECK(answer.witness->first == 1);
    CHECK(answer.witness->second == 1);

    const OvInstance no{2, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}};
    CHECK_FALSE(oracle::orthogonal_vectors(no).orthogonal);
}

TEST_CASE("orthogonal vectors oracle against a second scan") {
    gen::Rng rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        const OvInstance ov = gen::random_ov(rng, 4, 4);
        bool found = false;
        for (const auto& b : ov.b) {
            for (const auto& a : ov.a) {
                found = found || std::inner_product(a.begin(), a.end(), b.begin(), 0) == 0;
            }
        }
        CHECK(oracle::orthogonal_vectors(ov).orthogonal == found);
    }
}

TEST_CASE("walk enumeration") {
    const LabeledDigraph path = make_graph(2, {0, 1, 0}, {{0, 1}, {1, 2}});
    auto costs = oracle::walk_enumeration(path, make_pattern({0, 0, 0}));
    CHECK(costs.pattern_subs == Cost(1));
    CHECK(costs.graph_subs == Cost(1));
    CHECK(costs.walks == 1);

    const LabeledDigraph loop = make_graph(2, {0}, {{0, 0}});
    costs = oracle::walk_enumeration(loop, make_pattern({1, 1, 1}));
    CHECK(costs.pattern_subs == Cost(3));
    CHECK(costs.graph_subs == Cost(1));

    costs = oracle::walk_enumeration(path, make_pattern({0, 0, 0, 0}));
    CHECK(costs.pattern_subs.is_infinite());
    CHECK(costs.graph_subs.is_infinite());

    const LabeledDigraph dense = make_graph(2, {0, 1}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(oracle::walk_enumeration(dense, make_pattern({0, 0, 0, 0, 0, 0}), 20), Error);
}

}
