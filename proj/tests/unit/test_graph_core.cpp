#include <doctest.h>

#include <algorithm>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/error.hpp"
#include "helpers.hpp"

using namespace dbgmatch;
using dbgmatch::test::make_graph;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvariantViolation;
}

} // namespace

TEST_SUITE("graph_core") {

TEST_CASE("add_vertex assigns sequential ids") {
    LabeledDigraph g(4);
    CHECK(g.add_vertex(sym(0)) == 0);
    CHECK(g.vertex_count() == 1);
    g.add_vertex(sym(1));
    g.add_vertex(sym(3));
    CHECK(g.add_vertex(sym(2)) == 3);
    CHECK(code_of([&] { g.add_vertex(sym(5)); }) == ErrorCode::AlphabetRange);
}

TEST_CASE("add_edge keeps the graph simple") {
    LabeledDigraph g = make_graph(2, {0, 1}, {});
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    g.add_edge(0, 0);
    CHECK(g.has_edge(0, 0));
    CHECK(code_of([&] { g.add_edge(0, 9); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("merging a 2-cycle leaves one self-loop") {
    LabeledDigraph g = make_graph(2, {1, 1}, {{0, 1}, {1, 0}});
    VertexId w = g.merge_vertices(0, 1);
    CHECK(w == 2);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edges() == std::vector<Edge>{{w, w}});
    CHECK_FALSE(g.contains(0));
    CHECK_FALSE(g.contains(1));
}

TEST_CASE("merging collapses parallel edges") {
    LabeledDigraph g = make_graph(2, {0, 1, 1}, {{0, 1}, {0, 2}});
    VertexId w = g.merge_vertices(1, 2);
    CHECK(g.edges() == std::vector<Edge>{{0, w}});
}

TEST_CASE("merging an isolated vertex keeps the other's edges") {
    LabeledDigraph g = make_graph(2, {1, 1, 0}, {{1, 2}});
    VertexId w = g.merge_vertices(0, 1);
    CHECK(g.edges() == std::vector<Edge>{{w, 2}});
}

TEST_CASE("merge preconditions") {
    LabeledDigraph g = make_graph(2, {0, 1}, {});
    CHECK(code_of([&] { g.merge_vertices(0, 0); }) == ErrorCode::SameVertex);
    CHECK(code_of([&] { g.merge_vertices(0, 1); }) == ErrorCode::LabelMismatch);
}

TEST_CASE("repeated merges never leave dangling endpoints") {
    LabeledDigraph g(1);
    for (int i = 0; i < 8; ++i) {
        g.add_vertex(sym(0));
    }
    for (VertexId u = 0; u < 8; ++u) {
        g.add_edge(u, (u + 1) % 8);
        g.add_edge(u, (u + 3) % 8);
    }
    VertexId a = g.merge_vertices(0, 4);
    VertexId b = g.merge_vertices(1, 5);
    g.merge_vertices(a, b);
    g.merge_vertices(2, 3);
    for (const auto& [t, h] : g.edges()) {
        CHECK(g.contains(t));
        CHECK(g.contains(h));
    }
    auto edges = g.edges();
    CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
}

TEST_CASE("implicit labels of a labeled 3-cycle") {
    LabeledDigraph g = make_graph(3, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    DeBruijnGraph d = compute_implicit_labels(g, 3);
    CHECK(d.implicit_label(0) == symbols_from({1, 2, 0}));
    CHECK(d.implicit_label(1) == symbols_from({2, 0, 1}));
    CHECK(d.implicit_label(2) == symbols_from({0, 1, 2}));
    CHECK(validate_de_bruijn(d).ok());
}

TEST_CASE("implicit label errors") {
    LabeledDigraph lone = make_graph(2, {0}, {});
    CHECK(code_of([&] { compute_implicit_labels(lone, 2); }) == ErrorCode::NoIncomingWalk);

    LabeledDigraph fork = make_graph(2, {0, 1, 0}, {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
    CHECK(code_of([&] { compute_implicit_labels(fork, 2); }) == ErrorCode::AmbiguousImplicitLabel);
}

TEST_CASE("full de Bruijn graph sizes") {
    auto g21 = full_de_bruijn(2, 1);
    CHECK(g21.base().vertex_count() == 2);
    CHECK(g21.base().edge_count() == 4);
    auto g23 = full_de_bruijn(2, 3);
    CHECK(g23.base().vertex_count() == 8);
    CHECK(g23.base().edge_count() == 16);
    CHECK(code_of([] { full_de_bruijn(4, 10); }) == ErrorCode::SizeCap);
}

TEST_CASE("full de Bruijn graphs validate and recompute their labels") {
    for (unsigned sigma : {2u, 3u, 4u}) {
        for (std::size_t k = 1; k <= 4; ++k) {
            CAPTURE(sigma);
            CAPTURE(k);
            const DeBruijnGraph g = full_de_bruijn(sigma, k);
            CHECK(validate_de_bruijn(g).ok());
            const DeBruijnGraph again = compute_implicit_labels(g.base(), k);
            for (VertexId v : g.base().vertices()) {
                CHECK(again.implicit_label(v) == g.implicit_label(v));
            }
        }
    }
}

TEST_CASE("deleting an edge is reported as a missing edge") {
    DeBruijnGraph g = full_de_bruijn(2, 2);
    // 01 -> 11
    REQUIRE(g.mutable_base().remove_edge(1, 3));
    const ValidationReport r = validate_de_bruijn(g);
    REQUIRE(r.count(ViolationKind::MissingEdge) == 1);
    const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                                 [](const Violation& v) { return v.kind == ViolationKind::MissingEdge; });
    CHECK(it->vertices == std::vector<VertexId>{1, 3});
}

TEST_CASE("every single-edge deletion is detected") {
    for (unsigned sigma : {2u, 3u}) {
        for (std::size_t k = 1; k <= 3; ++k) {
            const DeBruijnGraph full = full_de_bruijn(sigma, k);
            for (const auto& [t, h] : full.base().edges()) {
                DeBruijnGraph g = full;
                g.mutable_base().remove_edge(t, h);
                CHECK(validate_de_bruijn(g).count(ViolationKind::MissingEdge) >= 1);
            }
        }
    }
}

TEST_CASE("duplicated implicit labels are detected") {
    const DeBruijnGraph full = full_de_bruijn(3, 2);
    for (VertexId u : full.base().vertices()) {
        for (VertexId v : full.base().vertices()) {
            if (u == v || full.base().label(u) != full.base().label(v)) {
                continue;
            }
            DeBruijnGraph g = full;
            g.set_implicit_label(v, full.implicit_label(u));
            CHECK(validate_de_bruijn(g).count(ViolationKind::DuplicateImplicitLabel) >= 1);
        }
    }
}

TEST_CASE("ill-defined implicit label comes with a witness walk") {
    // two predecessors with different labels into one vertex, order 2
    LabeledDigraph base = make_graph(2, {0, 1, 0}, {{0, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
    DeBruijnGraph g(base, 2);
    g.set_implicit_label(0, symbols_from({0, 0}));
    g.set_implicit_label(1, symbols_from({1, 1}));
    g.set_implicit_label(2, symbols_from({0, 0}));
    const ValidationReport r = validate_de_bruijn(g);
    REQUIRE(r.count(ViolationKind::IllDefinedImplicitLabel) >= 1);
    for (const auto& v : r.violations) {
        if (v.kind == ViolationKind::IllDefinedImplicitLabel) {
            CHECK(base.is_walk(v.witness));
        }
    }
}

TEST_CASE("every corrupted leading symbol is reported as ill-defined") {
    const DeBruijnGraph full = full_de_bruijn(3, 3);
    for (VertexId v : full.base().vertices()) {
        for (unsigned shift = 1; shift < 3; ++shift) {
            SymbolString label = full.implicit_label(v);
            label[0] = sym((label[0].value + shift) % 3);
            DeBruijnGraph g = full;
            g.set_implicit_label(v, label);
            const ValidationReport r = validate_de_bruijn(g);
            const bool named = std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& x) {
                return x.kind == ViolationKind::IllDefinedImplicitLabel && x.vertices.front() == v &&
                       full.base().is_walk(x.witness);
            });
            CHECK(named);
        }
    }
}

TEST_CASE("implicit label must end with the vertex label") {
    DeBruijnGraph g = full_de_bruijn(2, 2);
    CHECK(code_of([&] { g.set_implicit_label(0, symbols_from({0})); }) == ErrorCode::Range);
    CHECK(code_of([&] { g.set_implicit_label(0, symbols_from({0, 1})); }) == ErrorCode::LabelMismatch);
}

}
