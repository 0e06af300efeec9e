#pragma once

#include <initializer_list>
#include <utility>

#include "dbgmatch/graph.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch::test {

inline LabeledDigraph make_graph(unsigned sigma, std::initializer_list<unsigned> labels,
                                 std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    LabeledDigraph g(sigma);
    for (unsigned l : labels) {
        g.add_vertex(sym(l));
    }
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Pattern make_pattern(std::initializer_list<unsigned> symbols) { return Pattern(symbols_from(symbols)); }

} // namespace dbgmatch::test
