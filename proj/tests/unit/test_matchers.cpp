#include <doctest.h>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/error.hpp"
#include "dbgmatch/oracles.hpp"
#include "dbgmatch/random.hpp"
#include "helpers.hpp"

using namespace dbgmatch;
using dbgmatch::test::make_graph;
using dbgmatch::test::make_pattern;

TEST_SUITE("matchers") {

TEST_CASE("exact matching") {
    LabeledDigraph cycle = make_graph(3, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    MatchResult r = match_exact(cycle, make_pattern({0, 1, 2, 0, 1}));
    REQUIRE(r.feasible());
    CHECK(r.walk->vertices == std::vector<VertexId>{0, 1, 2, 0, 1});
    CHECK(replay_witness(cycle, make_pattern({0, 1, 2, 0, 1}), r));

    CHECK_FALSE(match_exact(cycle, make_pattern({0, 0})).feasible());

    const DeBruijnGraph full = full_de_bruijn(2, 2);
    for (unsigned bits = 0; bits < 32; ++bits) {
        SymbolString s;
        for (int i = 4; i >= 0; --i) {
            s.push_back(sym((bits >> i) & 1));
        }
        CHECK(match_exact(full.base(), Pattern(s)).feasible());
    }
}

TEST_CASE("pattern substitutions on small graphs") {
    LabeledDigraph path = make_graph(2, {0, 1, 0}, {{0, 1}, {1, 2}});
    MatchResult r = min_pattern_substitutions(path, make_pattern({0, 0, 0}));
    CHECK(r.cost == Cost(1));
    CHECK(r.pattern_edits == std::vector<std::size_t>{2});
    CHECK(replay_witness(path, make_pattern({0, 0, 0}), r));

    LabeledDigraph loop = make_graph(2, {0}, {{0, 0}});
    CHECK(min_pattern_substitutions(loop, make_pattern({1, 1, 1})).cost == Cost(3));

    LabeledDigraph cycle = make_graph(3, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(min_pattern_substitutions(cycle, make_pattern({1, 2, 0, 1})).cost == Cost(0));

    MatchResult none = min_pattern_substitutions(path, make_pattern({0, 0, 0, 0}));
    CHECK(none.cost.is_infinite());
    CHECK_FALSE(none.walk.has_value());
    CHECK_FALSE(none.feasible());
}

TEST_CASE("pattern substitutions respect the budget") {
    LabeledDigraph path = make_graph(2, {0, 1, 0}, {{0, 1}, {1, 2}});
    CHECK_FALSE(min_pattern_substitutions(path, make_pattern({0, 0, 0}), {0, true}).feasible());
    CHECK(min_pattern_substitutions(path, make_pattern({0, 0, 0}), {1, true}).feasible());
}

TEST_CASE("ties go to the smallest predecessor") {
    // 0 and 1 both feed 2, both labeled 0
    LabeledDigraph g = make_graph(2, {0, 0, 1}, {{1, 2}, {0, 2}});
    MatchResult r = min_pattern_substitutions(g, make_pattern({0, 1}));
    REQUIRE(r.walk);
    CHECK(r.walk->vertices == std::vector<VertexId>{0, 2});
}

TEST_CASE("graph substitutions use persistent relabels") {
    LabeledDigraph loop = make_graph(2, {0}, {{0, 0}});
    MatchResult r = min_graph_substitutions(loop, make_pattern({1, 1, 1}), 1);
    REQUIRE(r.feasible());
    CHECK(r.cost == Cost(1));
    CHECK(r.label_edits == std::vector<LabelEdit>{{0, sym(1)}});
    CHECK(replay_witness(loop, make_pattern({1, 1, 1}), r));

    LabeledDigraph path = make_graph(2, {0, 1, 0}, {{0, 1}, {1, 2}});
    CHECK_FALSE(min_graph_substitutions(path, make_pattern({0, 0, 0}), 0).feasible());

    LabeledDigraph two = make_graph(2, {0, 1}, {{0, 1}, {1, 0}});
    MatchResult t = min_graph_substitutions(two, make_pattern({0, 0, 0, 0}), 1);
    REQUIRE(t.feasible());
    CHECK(t.label_edits == std::vector<LabelEdit>{{1, sym(0)}});
}

TEST_CASE("graph substitutions report Indeterminate at the cap") {
    LabeledDigraph g(4);
    for (int i = 0; i < 6; ++i) {
        g.add_vertex(sym(0));
    }
    for (VertexId u = 0; u < 6; ++u) {
        for (VertexId v = 0; v < 6; ++v) {
            g.add_edge(u, v);
        }
    }
    // needs three relabels, so budget 2 forces a wide search
    const Pattern p = make_pattern({1, 2, 3, 1, 2, 3, 1, 2});
    CHECK(min_graph_substitutions(g, p, 2).verdict == Verdict::Infeasible);
    MatchResult r = min_graph_substitutions(g, p, 2, {50});
    CHECK(r.verdict == Verdict::Indeterminate);
    CHECK_FALSE(r.feasible());
}

TEST_CASE("constrained program") {
    LabeledDigraph path = make_graph(2, {0, 1, 0}, {{0, 1}, {1, 2}});
    const Pattern p = make_pattern({0, 0, 0});
    CHECK(constrained_pattern_dp(path, p, {}).cost == min_pattern_substitutions(path, p).cost);
    CHECK(constrained_pattern_dp(path, p, {2}).cost.is_infinite());
    CHECK(constrained_pattern_dp(path, p, {1, 3}).cost == Cost(1));
    CHECK_THROWS_AS(constrained_pattern_dp(path, p, {4}), Error);
}

TEST_CASE("input errors") {
    LabeledDigraph g = make_graph(2, {0, 1}, {{0, 1}});
    CHECK_THROWS_AS(min_pattern_substitutions(g, Pattern{}), Error);
    CHECK_THROWS_AS(match_exact(g, make_pattern({2})), Error);
    CHECK_THROWS_AS(min_graph_substitutions(g, make_pattern({0, 3}), 1), Error);
}

TEST_CASE("cost arithmetic saturates") {
    CHECK((Cost::infinity() + Cost(1)).is_infinite());
    CHECK((Cost(2) + Cost(3)) == Cost(5));
    CHECK(Cost(7) < Cost::infinity());
}

TEST_CASE("randomized agreement with walk enumeration") {
    gen::Rng rng(20241018);
    std::uniform_int_distribution<std::size_t> nv(1, 6), len(1, 8);
    std::uniform_int_distribution<unsigned> alphabet(1, 4);
    std::uniform_real_distribution<double> density(0.15, 0.6);
    for (int iter = 0; iter < 300; ++iter) {
        const unsigned sigma = alphabet(rng);
        const LabeledDigraph g = gen::random_graph(rng, nv(rng), sigma, density(rng));
        const Pattern p = gen::random_pattern(rng, len(rng), sigma);
        CAPTURE(iter);
        const auto truth = oracle::walk_enumeration(g, p);

        const MatchResult dp = min_pattern_substitutions(g, p);
        CHECK(dp.cost == truth.pattern_subs);
        if (dp.feasible()) {
            CHECK(replay_witness(g, p, dp));
        }

        const std::uint64_t budget = truth.graph_subs.is_finite() ? truth.graph_subs.value() : p.size();
        const MatchResult dfs = min_graph_substitutions(g, p, budget);
        REQUIRE(dfs.verdict != Verdict::Indeterminate);
        CHECK(dfs.cost == truth.graph_subs);
        if (dfs.feasible()) {
            CHECK(replay_witness(g, p, dfs));
        }

        const bool exact = match_exact(g, p).feasible();
        CHECK(exact == (dp.cost == Cost(0)));
        CHECK(exact == min_graph_substitutions(g, p, 0).feasible());
    }
}

TEST_CASE("graph substitutions are monotone in the budget") {
    gen::Rng rng(77);
    for (int iter = 0; iter < 60; ++iter) {
        const LabeledDigraph g = gen::random_graph(rng, 5, 3, 0.4);
        const Pattern p = gen::random_pattern(rng, 6, 3);
        bool seen = false;
        for (std::uint64_t delta = 0; delta <= p.size(); ++delta) {
            const bool ok = min_graph_substitutions(g, p, delta).feasible();
            CHECK((!seen || ok));
            seen = seen || ok;
        }
    }
}

}
