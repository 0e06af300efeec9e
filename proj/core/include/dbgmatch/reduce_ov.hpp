#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/instance.hpp"

namespace dbgmatch::ov {

inline constexpr unsigned kSigma = 4;

using Block = std::array<Symbol, 4>;

Block f_a(std::uint8_t bit);
Block f_b(std::uint8_t bit);

std::size_t hamming(const Block& x, const Block& y);

/// Throws NotPowerOfTwo, DimensionTooSmall or InvariantViolation.
void check_instance(const OvInstance& ov);

OvParams ov_params(std::size_t count, std::size_t dim);

/// f_A(a[1]) ... f_A(a[d]) f_A(0): the graph side vector gadget.
SymbolString graph_gadget(std::span<const std::uint8_t> a);
/// f_A(0)^d f_A(1): the extra Selection path.
SymbolString fallback_gadget(std::size_t dim);
/// f_B(b[1]) ... f_B(b[d]) f_B(1): the pattern side vector gadget.
SymbolString pattern_gadget(std::span<const std::uint8_t> b);

/// Block-wise Hamming cost of the pattern gadget for b against the graph gadget for a.
std::size_t gadget_cost(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct OvGraph {
    DeBruijnGraph graph;
    std::vector<Section> sections;
};

OvGraph build_ov_graph(const std::vector<std::vector<std::uint8_t>>& a_set, const OvParams& params);

Pattern build_ov_pattern(const std::vector<std::vector<std::uint8_t>>& b_set, const OvParams& params);

InstanceBundle build_seth_instance(const OvInstance& ov);

/// 1-based positions of symbol 3 in the pattern.
std::set<std::size_t> three_positions(const Pattern& p);

struct ProbeReport {
    Cost unconstrained;
    Cost constrained;
    bool equal() const noexcept { return unconstrained == constrained; }
    ValidationReport report;
};

/// Compares the unconstrained DP cost with the cost when every 3 in P must match exactly.
ProbeReport check_ov_optimality_probes(const InstanceBundle& b);

/// Same probe with an explicit forbidden set.
ProbeReport check_ov_optimality_probes(const InstanceBundle& b, const std::set<std::size_t>& forbidden);

/// Synchronization loop has k vertices, exactly one labeled 3, and implicit labels are unique.
ValidationReport check_ov_structure(const InstanceBundle& b);

} // namespace dbgmatch::ov
