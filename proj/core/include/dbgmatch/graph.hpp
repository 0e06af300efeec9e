#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dbgmatch/symbol.hpp"

namespace dbgmatch {

using VertexId = std::uint32_t;

using Edge = std::pair<VertexId, VertexId>;

/// Ordered vertex sequence; consecutive pairs must be edges of the owning graph.
struct Walk {
    std::vector<VertexId> vertices;

    bool operator==(const Walk&) const = default;
};

/*
 * Simple directed graph with one symbol per vertex.
 *
 * Ids are handed out sequentially and never reused. Merging retires both
 * inputs and allocates a fresh id, so the id space may contain dead slots;
 * use vertices() to iterate live ids and compacted() to renumber densely.
 * Adjacency lists are kept sorted by id.
 */
class LabeledDigraph {
public:
    explicit LabeledDigraph(unsigned sigma = 2);

    unsigned sigma() const noexcept { return sigma_; }

    VertexId add_vertex(Symbol label);

    /// Inserting an existing edge is a no-op.
    void add_edge(VertexId tail, VertexId head);

    /// Returns false when the edge was not present.
    bool remove_edge(VertexId tail, VertexId head);

    /// Merges u and v into a fresh vertex carrying their common label.
    VertexId merge_vertices(VertexId u, VertexId v);

    void relabel(VertexId v, Symbol label);

    bool contains(VertexId v) const noexcept { return v < nodes_.size() && nodes_[v].live; }
    bool has_edge(VertexId tail, VertexId head) const;

    Symbol label(VertexId v) const {
        require_live(v);
        return nodes_[v].label;
    }
    std::span<const VertexId> successors(VertexId v) const {
        require_live(v);
        return nodes_[v].out;
    }
    std::span<const VertexId> predecessors(VertexId v) const {
        require_live(v);
        return nodes_[v].in;
    }

    /// One past the largest id ever allocated.
    std::size_t id_bound() const noexcept { return nodes_.size(); }
    std::size_t vertex_count() const noexcept { return live_; }
    std::size_t edge_count() const noexcept { return edges_; }

    std::vector<VertexId> vertices() const;
    /// All edges in (tail, head) lexicographic order.
    std::vector<Edge> edges() const;

    /// Copy with live vertices renumbered 0..n-1 in id order. When
    /// `old_to_new` is given it receives the mapping (dead slots map to
    /// `npos`).
    LabeledDigraph compacted(std::vector<VertexId>* old_to_new = nullptr) const;

    bool is_walk(const Walk& walk) const;

    static constexpr VertexId npos = static_cast<VertexId>(-1);

private:
    struct Node {
        Symbol label;
        bool live = true;
        std::vector<VertexId> out;
        std::vector<VertexId> in;
    };

    void require_live(VertexId v) const {
        if (!contains(v)) [[unlikely]] {
            throw_unknown(v);
        }
    }
    [[noreturn]] static void throw_unknown(VertexId v);

    unsigned sigma_;
    std::vector<Node> nodes_;
    std::size_t live_ = 0;
    std::size_t edges_ = 0;
};

} // namespace dbgmatch
