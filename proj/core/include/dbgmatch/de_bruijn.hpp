#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dbgmatch/graph.hpp"
#include "dbgmatch/report.hpp"
#include "dbgmatch/symbol.hpp"

namespace dbgmatch {

/*
 * A labeled digraph of order k where every vertex also carries its implicit
 * label: the length-k string spelled by any walk of k vertices ending there.
 * The implicit label of v always ends with L(v).
 */
class DeBruijnGraph {
public:
    DeBruijnGraph(LabeledDigraph base, std::size_t k);

    const LabeledDigraph& base() const noexcept { return base_; }
    LabeledDigraph& mutable_base() noexcept { return base_; }
    std::size_t order() const noexcept { return k_; }

    const SymbolString& implicit_label(VertexId v) const;
    void set_implicit_label(VertexId v, SymbolString label);
    bool has_implicit_label(VertexId v) const;
    /// Drops a stored label; used for vertices retired by merging.
    void clear_implicit_label(VertexId v);

    /// Vertex carrying `label`, if any. Linear scan; builders keep their own index.
    std::optional<VertexId> find(const SymbolString& label) const;

    /// Renumbers live vertices densely, carrying implicit labels along.
    DeBruijnGraph compacted(std::vector<VertexId>* old_to_new = nullptr) const;

private:
    LabeledDigraph base_;
    std::size_t k_;
    std::vector<SymbolString> implicit_;
};

/*
 * Derives implicit labels from scratch by walking backward k-1 steps from
 * every vertex. Only walks that reach the full length count. Throws
 * NoIncomingWalk when a vertex has no such walk and AmbiguousImplicitLabel
 * when two of them spell different strings.
 */
DeBruijnGraph compute_implicit_labels(const LabeledDigraph& g, std::size_t k);

/// Checks uniqueness, edge completeness and well-definedness of implicit labels.
ValidationReport validate_de_bruijn(const DeBruijnGraph& g);

inline constexpr std::size_t kDefaultFullGraphCap = 1'000'000;

/// Order-k full de Bruijn graph; vertex id is the k-mer read as a base-sigma number.
DeBruijnGraph full_de_bruijn(unsigned sigma, std::size_t k,
                             std::size_t vertex_cap = kDefaultFullGraphCap);

/// Associative index from implicit label to vertex, used while building.
using ImplicitIndex = std::unordered_map<SymbolString, VertexId, SymbolStringHash>;

ImplicitIndex build_implicit_index(const DeBruijnGraph& g);

} // namespace dbgmatch
