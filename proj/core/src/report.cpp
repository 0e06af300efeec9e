#include "dbgmatch/report.hpp"

#include <algorithm>

namespace dbgmatch {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::DuplicateImplicitLabel: return "duplicate-implicit-label";
    case ViolationKind::MissingEdge: return "missing-edge";
    case ViolationKind::IllDefinedImplicitLabel: return "ill-defined-implicit-label";
    case ViolationKind::InterMarkedWalkLength: return "inter-marked-walk-length";
    case ViolationKind::MarkedAdjacency: return "marked-adjacency";
    case ViolationKind::RunLength: return "run-length";
    case ViolationKind::LoopStructure: return "loop-structure";
    case ViolationKind::ProbeMismatch: return "probe-mismatch";
    }
    return "unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

void ValidationReport::merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

} // namespace dbgmatch
