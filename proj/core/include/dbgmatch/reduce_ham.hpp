#pragma once

#include <cstddef>
#include <vector>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/instance.hpp"

namespace dbgmatch::ham {

// Reduction alphabet: {0:'$', 1:'#', 2:'0', 3:'1'}.
inline constexpr Symbol kDollar = sym(0);
inline constexpr Symbol kHash = sym(1);
inline constexpr Symbol kZero = sym(2);
inline constexpr Symbol kOne = sym(3);
inline constexpr unsigned kSigma = 4;

/// Throws InvariantViolation unless g has no self-loops, every in/out-degree
/// is at least one and |E| <= edge_factor * |V|.
void check_instance(const HamInstance& g, std::size_t edge_factor = kDefaultEdgeFactor);

/// Splits every vertex v into v_in -> v_mid -> v_out; edge (u,v) becomes (u_out, v_in).
/// Vertex v maps to ids 3v, 3v+1, 3v+2.
HamInstance eliminate_two_cycles(const HamInstance& g);

bool has_two_cycle(const HamInstance& g);

NpcParams npc_params(std::size_t n);

/// enc(i) = (0^{2l} 1)^{2l} bin(i), bin most-significant bit first.
SymbolString enc(std::size_t i, std::size_t ell);

/// Vertex ids of one transformed edge, from phi(u) to phi(v).
struct PathHandle {
    std::vector<VertexId> vertices;
};

/*
 * Incremental construction of D'. Every new vertex is registered under its
 * implicit label; a vertex whose label is already present is merged into the
 * existing one right away.
 */
class NpcBuilder {
public:
    explicit NpcBuilder(NpcParams params);

    const NpcParams& params() const noexcept { return params_; }

    /// Appends the path for an edge from a vertex labeled `tail` to one labeled `head`.
    PathHandle transform_edge(std::size_t tail, std::size_t head);

    const DeBruijnGraph& graph() const noexcept { return graph_; }
    const ImplicitIndex& index() const noexcept { return index_; }
    std::size_t merges() const noexcept { return merges_; }

    /// Current id of the marked vertex for label i, if it exists.
    std::optional<VertexId> marked(std::size_t i) const;

    /// Implicit label enc(i) $^W enc(i) of a marked vertex.
    SymbolString marked_label(std::size_t i) const;

    /// The 7W-symbol string whose length-k windows are the path's implicit labels.
    SymbolString path_spelling(std::size_t tail, std::size_t head) const;

private:
    NpcParams params_;
    DeBruijnGraph graph_;
    ImplicitIndex index_;
    std::size_t merges_ = 0;
};

struct NpcOptions {
    bool skip_gadget = false;
    std::size_t edge_factor = kDefaultEdgeFactor;
};

/// Full reduction: Hamiltonian cycle instance to (D', P, delta).
InstanceBundle build_npc_instance(const HamInstance& g, const NpcOptions& options = {});

/// The pattern #^W enc(0) $^W enc(0) ... #^W enc(0) $^W enc(0) over n+1 blocks.
Pattern npc_pattern(const NpcParams& params);

/// Vertices of phi((u,v)) in a finished bundle, recovered through implicit labels.
std::vector<VertexId> edge_path(const InstanceBundle& b, VertexId u, VertexId v);

/// Inter-marked walk lengths, marked adjacency against the input edges and $/# run lengths.
ValidationReport check_npc_structure(const InstanceBundle& b);

} // namespace dbgmatch::ham
