#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dbgmatch/graph.hpp"

namespace dbgmatch {

enum class ViolationKind {
    // de Bruijn properties
    DuplicateImplicitLabel,
    MissingEdge,
    IllDefinedImplicitLabel,
    // reduction structure
    InterMarkedWalkLength,
    MarkedAdjacency,
    RunLength,
    LoopStructure,
    ProbeMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<VertexId> vertices;
    std::string detail;
    /// Offending walk, when the violation has one.
    Walk witness;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::size_t count(ViolationKind kind) const;
    void add(Violation v) { violations.push_back(std::move(v)); }
    void merge(const ValidationReport& other);
};

} // namespace dbgmatch
