#include "dbgmatch/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dbgmatch/error.hpp"

namespace dbgmatch::oracle {

namespace {

struct HamSearch {
    std::vector<std::vector<std::size_t>> adj; // dense indices
    std::vector<bool> used;
    std::vector<std::size_t> path;
    std::size_t n = 0;

    bool extend() {
        if (path.size() == n) {
            const auto& back = adj[path.back()];
            return std::find(back.begin(), back.end(), path.front()) != back.end();
        }
        for (std::size_t next : adj[path.back()]) {
            if (used[next]) {
                continue;
            }
            used[next] = true;
            path.push_back(next);
            if (extend()) {
                return true;
            }
            path.pop_back();
            used[next] = false;
        }
        return false;
    }
};

} // namespace

HamAnswer hamiltonian(const HamInstance& g, std::size_t vertex_cap) {
    const std::vector<VertexId> ids = g.graph.vertices();
    if (ids.size() > vertex_cap) {
        throw Error(ErrorCode::CapExceeded, "Hamiltonian oracle limited to " + std::to_string(vertex_cap) +
                                                " vertices, got " + std::to_string(ids.size()));
    }
    HamAnswer answer;
    if (ids.empty()) {
        return answer;
    }
    std::map<VertexId, std::size_t> dense;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        dense[ids[i]] = i;
    }
    HamSearch search;
    search.n = ids.size();
    search.adj.resize(ids.size());
    for (const auto& [tail, head] : g.graph.edges()) {
        search.adj[dense[tail]].push_back(dense[head]);
    }
    search.used.assign(ids.size(), false);
    // every Hamiltonian cycle passes through the first vertex
    search.used[0] = true;
    search.path.push_back(0);
    if (search.extend()) {
        answer.hamiltonian = true;
        for (std::size_t i : search.path) {
            answer.cycle.push_back(ids[i]);
        }
    }
    return answer;
}

OvAnswer orthogonal_vectors(const OvInstance& ov, std::size_t cap) {
    if (ov.size() * ov.dim > cap) {
        throw Error(ErrorCode::CapExceeded, "OV oracle input of " + std::to_string(ov.size() * ov.dim) +
                                                " bits exceeds cap " + std::to_string(cap));
    }
    OvAnswer answer;
    for (std::size_t i = 0; i < ov.a.size(); ++i) {
        for (std::size_t j = 0; j < ov.b.size(); ++j) {
            std::size_t product = 0;
            for (std::size_t x = 0; x < ov.dim; ++x) {
                product += static_cast<std::size_t>(ov.a[i][x] & ov.b[j][x]);
            }
            if (product == 0) {
                answer.orthogonal = true;
                answer.witness = std::make_pair(i, j);
                return answer;
            }
        }
    }
    return answer;
}

namespace {

struct WalkEnumerator {
    const LabeledDigraph& g;
    std::span<const Symbol> p;
    std::uint64_t cap;
    WalkCosts costs;
    std::vector<VertexId> walk;
    std::uint64_t steps = 0;

    void score() {
        std::uint64_t hamming = 0;
        std::map<VertexId, Symbol> required;
        bool consistent = true;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (g.label(walk[i]) != p[i]) {
                ++hamming;
            }
            auto [it, inserted] = required.emplace(walk[i], p[i]);
            if (!inserted && it->second != p[i]) {
                consistent = false;
            }
        }
        costs.pattern_subs = std::min(costs.pattern_subs, Cost(hamming));
        if (consistent) {
            std::uint64_t relabels = 0;
            for (const auto& [v, s] : required) {
                if (g.label(v) != s) {
                    ++relabels;
                }
            }
            costs.graph_subs = std::min(costs.graph_subs, Cost(relabels));
        }
    }

    void enumerate() {
        // Partial walks count too, so dead ends cannot run unbounded.
        if (++steps > cap) {
            throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " walk prefixes");
        }
        if (walk.size() == p.size()) {
            ++costs.walks;
            score();
            return;
        }
        for (VertexId next : g.successors(walk.back())) {
            walk.push_back(next);
            enumerate();
            walk.pop_back();
        }
    }
};

} // namespace

WalkCosts walk_enumeration(const LabeledDigraph& g, const Pattern& p, std::uint64_t walk_cap) {
    if (p.empty()) {
        throw Error(ErrorCode::EmptyPattern, "pattern must contain at least one symbol");
    }
    WalkEnumerator e{g, p.symbols(), walk_cap, {}, {}};
    for (VertexId v : g.vertices()) {
        e.walk = {v};
        e.enumerate();
    }
    return e.costs;
}

} // namespace dbgmatch::oracle
