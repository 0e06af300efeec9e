#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/graph.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch {

/// Directed graph for the Hamiltonian cycle problem; labels are ignored.
struct HamInstance {
    LabeledDigraph graph{1};

    std::size_t n() const noexcept { return graph.vertex_count(); }

    static HamInstance from_edges(std::size_t n, const std::vector<Edge>& edges);
};

inline constexpr std::size_t kDefaultEdgeFactor = 4;

struct OvInstance {
    std::size_t dim = 0;
    std::vector<std::vector<std::uint8_t>> a;
    std::vector<std::vector<std::uint8_t>> b;

    std::size_t size() const noexcept { return a.size(); }
};

struct NpcParams {
    std::size_t n = 0;
    std::size_t ell = 0;
    std::size_t width = 0; // W = |enc(i)|
    std::size_t k = 0;
    std::uint64_t delta = 0;

    bool operator==(const NpcParams&) const = default;
};

struct OvParams {
    std::size_t count = 0; // N
    std::size_t dim = 0;   // d
    std::size_t fan_depth = 0; // c
    std::size_t k = 0;
    std::size_t ell = 0;
    std::size_t t = 0;
    std::uint64_t delta = 0;

    bool operator==(const OvParams&) const = default;
};

enum class Section : std::uint8_t {
    SelectionFanIn,
    Selection,
    PostSelectionMerge,
    SynchronizationLoop,
};

struct InstanceBundle {
    DeBruijnGraph graph{LabeledDigraph{4}, 1};
    Pattern pattern;
    std::uint64_t delta = 0;
    /// (input vertex id, marked vertex id) for the Hamiltonian reduction.
    std::vector<std::pair<VertexId, VertexId>> marked;
    std::variant<NpcParams, OvParams> params;
    /// Section of every graph vertex for the OV reduction.
    std::vector<Section> sections;
    /// The Hamiltonian instance after preprocessing.
    HamInstance source;
};

} // namespace dbgmatch
