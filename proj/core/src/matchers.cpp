#include "dbgmatch/matchers.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dbgmatch/error.hpp"

namespace dbgmatch {

Symbol Pattern::at(std::size_t i) const {
    if (i == 0 || i > symbols_.size()) {
        throw Error(ErrorCode::Range, "pattern index " + std::to_string(i) + " outside [1, " +
                                          std::to_string(symbols_.size()) + "]");
    }
    return symbols_[i - 1];
}

namespace {

void check_pattern(const LabeledDigraph& g, const Pattern& p) {
    if (p.empty()) {
        throw Error(ErrorCode::EmptyPattern, "pattern must contain at least one symbol");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.symbols()[i].value >= g.sigma()) {
            throw Error(ErrorCode::AlphabetRange, "pattern symbol " + std::to_string(p.symbols()[i].value) +
                                                      " at index " + std::to_string(i + 1) +
                                                      " outside alphabet of size " + std::to_string(g.sigma()));
        }
    }
}

std::vector<std::size_t> mismatches(const LabeledDigraph& g, const Pattern& p, const Walk& walk) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
        if (g.label(walk.vertices[i]) != p.symbols()[i]) {
            out.push_back(i + 1);
        }
    }
    return out;
}

// cost[i][v] = min over (u,v) of cost[i-1][u] + step(i, v); `locked[i]` forbids substitution at i.
MatchResult run_dp(const LabeledDigraph& g, const Pattern& p, const std::vector<bool>& locked,
                   const DpOptions& options) {
    check_pattern(g, p);
    const std::size_t m = p.size();
    const std::size_t n = g.id_bound();
    const std::vector<VertexId> vertices = g.vertices();
    auto step = [&](std::size_t i, VertexId v) {
        if (g.label(v) == p.symbols()[i]) return Cost(0);
        return locked[i] ? Cost::infinity() : Cost(1);
    };

    std::vector<Cost> prev(n, Cost::infinity());
    std::vector<Cost> cur(n, Cost::infinity());
    std::vector<VertexId> back;
    if (options.witness) {
        back.assign(m * n, LabeledDigraph::npos);
    }
    for (VertexId v : vertices) {
        prev[v] = step(0, v);
    }
    for (std::size_t i = 1; i < m; ++i) {
        for (VertexId v : vertices) {
            Cost best = Cost::infinity();
            VertexId arg = LabeledDigraph::npos;
            for (VertexId u : g.predecessors(v)) {
                if (prev[u] < best) {
                    best = prev[u];
                    arg = u;
                }
            }
            cur[v] = best + step(i, v);
            if (options.witness) {
                back[i * n + v] = arg;
            }
        }
        std::swap(prev, cur);
    }

    MatchResult result;
    VertexId end = LabeledDigraph::npos;
    for (VertexId v : vertices) {
        if (prev[v] < result.cost) {
            result.cost = prev[v];
            end = v;
        }
    }
    if (result.cost.is_infinite()) {
        result.verdict = Verdict::Infeasible;
        return result;
    }
    const bool within = !options.delta || result.cost.value() <= *options.delta;
    result.verdict = within ? Verdict::Feasible : Verdict::Infeasible;
    if (options.witness) {
        Walk walk;
        walk.vertices.resize(m);
        VertexId v = end;
        for (std::size_t i = m; i-- > 0;) {
            walk.vertices[i] = v;
            if (i > 0) {
                v = back[i * n + v];
            }
        }
        result.pattern_edits = mismatches(g, p, walk);
        result.walk = std::move(walk);
    }
    return result;
}

class GraphSubsSearch {
public:
    GraphSubsSearch(const LabeledDigraph& g, const Pattern& p, std::uint64_t delta, std::uint64_t cap)
        : g_(g), p_(p.symbols()), cap_(cap), bound_(delta), assigned_(g.id_bound(), kUnassigned) {}

    MatchResult run() {
        for (VertexId v : g_.vertices()) {
            visit(v, 0);
            if (aborted_ || done_) {
                break;
            }
        }
        MatchResult result;
        result.expansions = expansions_;
        if (best_walk_) {
            result.cost = Cost(best_cost_);
            result.label_edits = best_edits_;
            result.walk = Walk{*best_walk_};
        }
        if (aborted_) {
            result.verdict = Verdict::Indeterminate;
        } else {
            result.verdict = best_walk_ ? Verdict::Feasible : Verdict::Infeasible;
        }
        return result;
    }

private:
    static constexpr int kUnassigned = -1;

    void visit(VertexId v, std::size_t i) {
        if (++expansions_ > cap_) {
            aborted_ = true;
            return;
        }
        const Symbol want = p_[i];
        bool fresh = false;
        std::uint64_t pay = 0;
        if (assigned_[v] != kUnassigned) {
            if (assigned_[v] != want.value) {
                return;
            }
        } else {
            pay = g_.label(v) != want ? 1 : 0;
            if (paid_ + pay > bound_) {
                return;
            }
            assigned_[v] = want.value;
            fresh = true;
        }
        paid_ += pay;
        walk_.push_back(v);

        if (i + 1 == p_.size()) {
            record();
        } else {
            for (VertexId w : g_.successors(v)) {
                if (aborted_ || done_ || paid_ > bound_) {
                    break;
                }
                visit(w, i + 1);
            }
        }

        walk_.pop_back();
        paid_ -= pay;
        if (fresh) {
            assigned_[v] = kUnassigned;
        }
    }

    void record() {
        best_cost_ = paid_;
        best_walk_ = walk_;
        best_edits_.clear();
        std::vector<VertexId> seen = walk_;
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (VertexId v : seen) {
            if (assigned_[v] != g_.label(v).value) {
                best_edits_.push_back({v, sym(static_cast<unsigned>(assigned_[v]))});
            }
        }
        if (paid_ == 0) {
            done_ = true;
        } else {
            bound_ = paid_ - 1;
        }
    }

    const LabeledDigraph& g_;
    std::span<const Symbol> p_;
    std::uint64_t cap_;
    std::uint64_t bound_;
    std::vector<int> assigned_;
    std::vector<VertexId> walk_;
    std::uint64_t paid_ = 0;
    std::uint64_t expansions_ = 0;
    bool aborted_ = false;
    bool done_ = false;
    std::uint64_t best_cost_ = 0;
    std::optional<std::vector<VertexId>> best_walk_;
    std::vector<LabelEdit> best_edits_;
};

} // namespace

MatchResult match_exact(const LabeledDigraph& g, const Pattern& p, bool witness) {
    check_pattern(g, p);
    const std::size_t m = p.size();
    const std::size_t n = g.id_bound();
    const std::vector<VertexId> vertices = g.vertices();

    std::vector<char> prev(n, 0);
    std::vector<char> cur(n, 0);
    std::vector<VertexId> parent;
    if (witness) {
        parent.assign(m * n, LabeledDigraph::npos);
    }
    for (VertexId v : vertices) {
        prev[v] = g.label(v) == p.symbols()[0];
    }
    for (std::size_t i = 1; i < m; ++i) {
        for (VertexId v : vertices) {
            cur[v] = 0;
            if (g.label(v) != p.symbols()[i]) {
                continue;
            }
            for (VertexId u : g.predecessors(v)) {
                if (prev[u]) {
                    cur[v] = 1;
                    if (witness) {
                        parent[i * n + v] = u;
                    }
                    break;
                }
            }
        }
        std::swap(prev, cur);
    }

    MatchResult result;
    auto end = std::find_if(vertices.begin(), vertices.end(), [&](VertexId v) { return prev[v] != 0; });
    if (end == vertices.end()) {
        return result;
    }
    result.verdict = Verdict::Feasible;
    result.cost = Cost(0);
    if (witness) {
        Walk walk;
        walk.vertices.resize(m);
        VertexId v = *end;
        for (std::size_t i = m; i-- > 0;) {
            walk.vertices[i] = v;
            if (i > 0) {
                v = parent[i * n + v];
            }
        }
        result.walk = std::move(walk);
    }
    return result;
}

MatchResult min_pattern_substitutions(const LabeledDigraph& g, const Pattern& p, const DpOptions& options) {
    return run_dp(g, p, std::vector<bool>(p.size(), false), options);
}

MatchResult constrained_pattern_dp(const LabeledDigraph& g, const Pattern& p,
                                   const std::set<std::size_t>& forbidden, const DpOptions& options) {
    std::vector<bool> locked(p.size(), false);
    for (std::size_t i : forbidden) {
        if (i == 0 || i > p.size()) {
            throw Error(ErrorCode::Range, "forbidden index " + std::to_string(i) + " outside [1, " +
                                              std::to_string(p.size()) + "]");
        }
        locked[i - 1] = true;
    }
    return run_dp(g, p, locked, options);
}

MatchResult min_graph_substitutions(const LabeledDigraph& g, const Pattern& p, std::uint64_t delta,
                                    const SearchOptions& options) {
    check_pattern(g, p);
    return GraphSubsSearch(g, p, delta, options.expansion_cap).run();
}

bool replay_witness(const LabeledDigraph& g, const Pattern& p, const MatchResult& r) {
    if (!r.walk) {
        return !r.feasible();
    }
    const Walk& walk = *r.walk;
    if (walk.vertices.size() != p.size() || !g.is_walk(walk)) {
        return false;
    }
    std::map<VertexId, Symbol> relabel;
    for (const LabelEdit& e : r.label_edits) {
        if (!relabel.emplace(e.vertex, e.symbol).second || g.label(e.vertex) == e.symbol) {
            return false;
        }
        if (std::find(walk.vertices.begin(), walk.vertices.end(), e.vertex) == walk.vertices.end()) {
            return false;
        }
    }
    std::vector<bool> substituted(p.size(), false);
    for (std::size_t i : r.pattern_edits) {
        if (i == 0 || i > p.size() || substituted[i - 1]) {
            return false;
        }
        substituted[i - 1] = true;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        VertexId v = walk.vertices[i];
        auto it = relabel.find(v);
        Symbol s = it != relabel.end() ? it->second : g.label(v);
        // an edit must be needed and, after it, the position matches
        if (substituted[i] == (s == p.symbols()[i])) {
            return false;
        }
    }
    const std::size_t edits = r.pattern_edits.size() + r.label_edits.size();
    return r.cost.is_finite() && r.cost.value() == edits;
}

} // namespace dbgmatch
