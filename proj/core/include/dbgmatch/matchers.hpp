#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dbgmatch/graph.hpp"
#include "dbgmatch/symbol.hpp"

namespace dbgmatch {

/// Pattern P[1..m]; at() is 1-indexed, symbols() exposes the 0-indexed storage.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(SymbolString symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol at(std::size_t i) const;
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const SymbolString& str() const noexcept { return symbols_; }

    bool operator==(const Pattern&) const = default;

private:
    SymbolString symbols_;
};

/// Substitution count with a dedicated infinity; addition saturates.
class Cost {
public:
    constexpr Cost() = default;
    constexpr explicit Cost(std::uint64_t v) : value_(v) {}

    static constexpr Cost infinity() { return Cost(kInf); }

    constexpr bool is_infinite() const noexcept { return value_ == kInf; }
    constexpr bool is_finite() const noexcept { return value_ != kInf; }
    /// Only meaningful when finite.
    constexpr std::uint64_t value() const noexcept { return value_; }

    friend constexpr Cost operator+(Cost a, Cost b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Cost(a.value_ + b.value_);
    }
    friend constexpr auto operator<=>(Cost, Cost) = default;

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value_ = 0;
};

enum class Verdict { Feasible, Infeasible, Indeterminate };

struct LabelEdit {
    VertexId vertex;
    Symbol symbol;

    bool operator==(const LabelEdit&) const = default;
};

struct MatchResult {
    Verdict verdict = Verdict::Infeasible;
    /// Minimal substitution count; infinity when no qualifying walk exists or
    /// (for graph substitutions) none exists within the budget.
    Cost cost = Cost::infinity();
    std::optional<Walk> walk;
    /// Pattern substitutions, 1-based pattern indices.
    std::vector<std::size_t> pattern_edits;
    /// Vertex relabelings; only walk vertices ever appear.
    std::vector<LabelEdit> label_edits;
    /// Search effort, reported by the exhaustive solver.
    std::uint64_t expansions = 0;

    bool feasible() const noexcept { return verdict == Verdict::Feasible; }
};

struct DpOptions {
    /// When set, feasibility means cost <= delta; otherwise any finite cost.
    std::optional<std::uint64_t> delta;
    /// Keeps a backpointer matrix to recover a witness walk.
    bool witness = true;
};

/// Exact walk matching (zero substitutions).
MatchResult match_exact(const LabeledDigraph& g, const Pattern& p, bool witness = true);

/// Minimum substitutions to the pattern, O(|E| m) dynamic program.
MatchResult min_pattern_substitutions(const LabeledDigraph& g, const Pattern& p,
                                      const DpOptions& options = {});

/// The same program with substitution forbidden at the given 1-based pattern indices.
MatchResult constrained_pattern_dp(const LabeledDigraph& g, const Pattern& p,
                                   const std::set<std::size_t>& forbidden,
                                   const DpOptions& options = {});

inline constexpr std::uint64_t kDefaultExpansionCap = 100'000'000;

struct SearchOptions {
    std::uint64_t expansion_cap = kDefaultExpansionCap;
};

/*
 * Minimum persistent vertex relabelings so that some walk spells p, bounded
 * by delta. Exhaustive depth-first search; returns Indeterminate when the
 * expansion cap is hit before the search space is exhausted.
 */
MatchResult min_graph_substitutions(const LabeledDigraph& g, const Pattern& p,
                                    std::uint64_t delta, const SearchOptions& options = {});

/// True when applying the result's edits makes its walk spell p exactly.
bool replay_witness(const LabeledDigraph& g, const Pattern& p, const MatchResult& r);

} // namespace dbgmatch
