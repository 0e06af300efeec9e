#include "dbgmatch/instance.hpp"

namespace dbgmatch {

HamInstance HamInstance::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    HamInstance out;
    for (std::size_t i = 0; i < n; ++i) {
        out.graph.add_vertex(sym(0));
    }
    for (const auto& [tail, head] : edges) {
        out.graph.add_edge(tail, head);
    }
    return out;
}

} // namespace dbgmatch
