#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dbgmatch/instance.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch::gen {

using Rng = std::mt19937_64;

struct HamGenOptions {
    std::size_t n = 5;
    /// Target edge count; 0 picks a random count in [n, edge_factor * n].
    std::size_t edges = 0;
    std::size_t edge_factor = 2;
    bool two_cycle_free = false;
};

/// Random instance with no self-loops and every in/out-degree at least one.
HamInstance random_ham(Rng& rng, const HamGenOptions& options);

/// N vectors per side, uniformly random bits. Enforces N power of two and d > log N.
OvInstance random_ov(Rng& rng, std::size_t count, std::size_t dim);

LabeledDigraph random_graph(Rng& rng, std::size_t n, unsigned sigma, double edge_probability);

Pattern random_pattern(Rng& rng, std::size_t m, unsigned sigma);

/// All 2-cycle-free digraphs on n vertices satisfying the Hamiltonian instance invariants.
std::vector<HamInstance> all_two_cycle_free(std::size_t n, std::size_t edge_factor = kDefaultEdgeFactor);

} // namespace dbgmatch::gen
