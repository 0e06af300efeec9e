#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dbgmatch/graph.hpp"
#include "dbgmatch/instance.hpp"
#include "dbgmatch/matchers.hpp"

// Brute-force deciders. They depend only on the core graph types.
namespace dbgmatch::oracle {

inline constexpr std::size_t kDefaultHamCap = 12;

struct HamAnswer {
    bool hamiltonian = false;
    /// Cycle as a vertex sequence, first vertex not repeated at the end.
    std::vector<VertexId> cycle;
};

HamAnswer hamiltonian(const HamInstance& g, std::size_t vertex_cap = kDefaultHamCap);

inline constexpr std::size_t kDefaultOvCap = 1u << 24;

struct OvAnswer {
    bool orthogonal = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // 0-based (a, b)
};

OvAnswer orthogonal_vectors(const OvInstance& ov, std::size_t cap = kDefaultOvCap);

inline constexpr std::uint64_t kDefaultWalkCap = 10'000'000;

struct WalkCosts {
    Cost pattern_subs = Cost::infinity();
    Cost graph_subs = Cost::infinity();
    std::uint64_t walks = 0;
};

/// Enumerates every walk of |p| vertices and scores both problems on each.
/// The cap bounds walk prefixes visited, complete or not.
WalkCosts walk_enumeration(const LabeledDigraph& g, const Pattern& p,
                           std::uint64_t walk_cap = kDefaultWalkCap);

} // namespace dbgmatch::oracle
