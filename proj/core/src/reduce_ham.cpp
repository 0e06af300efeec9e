#include "dbgmatch/reduce_ham.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dbgmatch/error.hpp"

namespace dbgmatch::ham {

namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    return bits;
}

// Input vertices get labels 0..n-1 in id order.
std::map<VertexId, std::size_t> vertex_labels(const HamInstance& g) {
    std::map<VertexId, std::size_t> labels;
    for (VertexId v : g.graph.vertices()) {
        labels.emplace(v, labels.size());
    }
    return labels;
}

SymbolString window(const SymbolString& s, std::size_t start, std::size_t len) {
    return SymbolString(s.begin() + static_cast<std::ptrdiff_t>(start),
                        s.begin() + static_cast<std::ptrdiff_t>(start + len));
}

} // namespace

void check_instance(const HamInstance& g, std::size_t edge_factor) {
    const LabeledDigraph& d = g.graph;
    if (d.vertex_count() == 0) {
        throw Error(ErrorCode::InvariantViolation, "Hamiltonian instance has no vertices");
    }
    for (VertexId v : d.vertices()) {
        if (d.has_edge(v, v)) {
            throw Error(ErrorCode::InvariantViolation, "self-loop on vertex " + std::to_string(v));
        }
        if (d.successors(v).empty() || d.predecessors(v).empty()) {
            throw Error(ErrorCode::InvariantViolation,
                        "vertex " + std::to_string(v) + " has in-degree or out-degree zero");
        }
    }
    if (d.edge_count() > edge_factor * d.vertex_count()) {
        throw Error(ErrorCode::InvariantViolation,
                    std::to_string(d.edge_count()) + " edges exceed " + std::to_string(edge_factor) +
                        " * " + std::to_string(d.vertex_count()));
    }
}

bool has_two_cycle(const HamInstance& g) {
    for (const auto& [tail, head] : g.graph.edges()) {
        if (tail != head && g.graph.has_edge(head, tail)) {
            return true;
        }
    }
    return false;
}

HamInstance eliminate_two_cycles(const HamInstance& g) {
    check_instance(g, std::max(g.graph.edge_count(), std::size_t{1}));
    const auto labels = vertex_labels(g);
    const std::size_t n = labels.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const auto base = static_cast<VertexId>(3 * i);
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base + 1, base + 2);
    }
    for (const auto& [tail, head] : g.graph.edges()) {
        edges.emplace_back(static_cast<VertexId>(3 * labels.at(tail) + 2),
                           static_cast<VertexId>(3 * labels.at(head)));
    }
    return HamInstance::from_edges(3 * n, edges);
}

NpcParams npc_params(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::Range, "the reduction needs at least two vertices");
    }
    NpcParams p;
    p.n = n;
    p.ell = ceil_log2(n);
    p.width = 2 * p.ell * (2 * p.ell + 1) + p.ell;
    p.k = 3 * p.width;
    p.delta = 2 * p.ell * (n - 1);
    return p;
}

SymbolString enc(std::size_t i, std::size_t ell) {
    if (ell >= 64 || i >= (std::size_t{1} << ell)) {
        throw Error(ErrorCode::Range, std::to_string(i) + " does not fit in " + std::to_string(ell) + " bits");
    }
    SymbolString out;
    out.reserve(2 * ell * (2 * ell + 1) + ell);
    for (std::size_t rep = 0; rep < 2 * ell; ++rep) {
        append_run(out, kZero, 2 * ell);
        out.push_back(kOne);
    }
    for (std::size_t bit = ell; bit-- > 0;) {
        out.push_back(((i >> bit) & 1) ? kOne : kZero);
    }
    return out;
}

NpcBuilder::NpcBuilder(NpcParams params)
    : params_(params), graph_(LabeledDigraph(kSigma), params.k) {}

SymbolString NpcBuilder::marked_label(std::size_t i) const {
    SymbolString out = enc(i, params_.ell);
    append_run(out, kDollar, params_.width);
    append(out, enc(i, params_.ell));
    return out;
}

SymbolString NpcBuilder::path_spelling(std::size_t tail, std::size_t head) const {
    SymbolString out = marked_label(tail);
    append_run(out, kHash, params_.width);
    append(out, enc(head, params_.ell));
    append_run(out, kDollar, params_.width);
    append(out, enc(head, params_.ell));
    return out;
}

std::optional<VertexId> NpcBuilder::marked(std::size_t i) const {
    auto it = index_.find(marked_label(i));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

PathHandle NpcBuilder::transform_edge(std::size_t tail, std::size_t head) {
    const std::size_t w = params_.width;
    const std::size_t k = params_.k;
    const SymbolString spelling = path_spelling(tail, head);
    LabeledDigraph& g = graph_.mutable_base();

    PathHandle handle;
    VertexId prev = LabeledDigraph::npos;
    // vertex j of the path ends the window spelling[j, j+k); j = 0 is phi(tail)
    for (std::size_t j = 0; j <= 4 * w; ++j) {
        SymbolString implicit = window(spelling, j, k);
        VertexId v = g.add_vertex(implicit.back());
        if (prev != LabeledDigraph::npos) {
            g.add_edge(prev, v);
        }
        auto it = index_.find(implicit);
        if (it != index_.end()) {
            const VertexId existing = it->second;
            graph_.clear_implicit_label(existing);
            v = g.merge_vertices(existing, v);
            it->second = v;
            ++merges_;
        } else {
            index_.emplace(implicit, v);
        }
        graph_.set_implicit_label(v, std::move(implicit));
        handle.vertices.push_back(v);
        prev = v;
    }
    return handle;
}

Pattern npc_pattern(const NpcParams& params) {
    SymbolString p;
    p.reserve(4 * params.width * (params.n + 1));
    auto block = [&](std::size_t i) {
        append_run(p, kHash, params.width);
        append(p, enc(i, params.ell));
        append_run(p, kDollar, params.width);
        append(p, enc(i, params.ell));
    };
    for (std::size_t i = 0; i < params.n; ++i) {
        block(i);
    }
    block(0);
    return Pattern(std::move(p));
}

InstanceBundle build_npc_instance(const HamInstance& g, const NpcOptions& options) {
    check_instance(g, options.edge_factor);
    HamInstance pre;
    if (options.skip_gadget) {
        if (has_two_cycle(g)) {
            throw Error(ErrorCode::InvariantViolation, "input has a 2-cycle; the gadget cannot be skipped");
        }
        pre = g;
    } else {
        pre = eliminate_two_cycles(g);
    }
    const auto labels = vertex_labels(pre);
    const NpcParams params = npc_params(labels.size());

    // group edges by the label of their head, in increasing order
    std::vector<std::vector<Edge>> by_head(params.n);
    for (const auto& e : pre.graph.edges()) {
        by_head[labels.at(e.second)].push_back(e);
    }
    NpcBuilder builder(params);
    for (const auto& group : by_head) {
        for (const auto& [tail, head] : group) {
            builder.transform_edge(labels.at(tail), labels.at(head));
        }
    }

    InstanceBundle bundle;
    std::vector<VertexId> mapping;
    bundle.graph = builder.graph().compacted(&mapping);
    bundle.pattern = npc_pattern(params);
    bundle.delta = params.delta;
    bundle.params = params;
    for (const auto& [v, label] : labels) {
        auto phi = builder.marked(label);
        if (!phi) {
            throw Error(ErrorCode::InvariantViolation, "no marked vertex for input vertex " + std::to_string(v));
        }
        bundle.marked.emplace_back(v, mapping[*phi]);
    }
    bundle.source = std::move(pre);
    return bundle;
}

std::vector<VertexId> edge_path(const InstanceBundle& b, VertexId u, VertexId v) {
    const auto& params = std::get<NpcParams>(b.params);
    const auto labels = vertex_labels(b.source);
    NpcBuilder spell(params);
    const SymbolString spelling = spell.path_spelling(labels.at(u), labels.at(v));
    const ImplicitIndex index = build_implicit_index(b.graph);
    std::vector<VertexId> out;
    for (std::size_t j = 0; j <= 4 * params.width; ++j) {
        auto it = index.find(window(spelling, j, params.k));
        if (it == index.end()) {
            throw Error(ErrorCode::InvariantViolation, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                           ") has no path in the bundle");
        }
        out.push_back(it->second);
    }
    return out;
}

namespace {

void check_inter_marked(const InstanceBundle& b, const NpcParams& params, ValidationReport& report) {
    const LabeledDigraph& g = b.graph.base();
    const std::size_t span = 4 * params.width;
    std::map<VertexId, VertexId> source_of; // marked id -> input vertex
    for (const auto& [v, phi] : b.marked) {
        source_of.emplace(phi, v);
    }

    std::set<Edge> recovered;
    std::vector<std::uint64_t> stamp(g.id_bound(), 0);
    std::uint64_t epoch = 0;
    for (const auto& [u, phi_u] : b.marked) {
        std::vector<VertexId> frontier{phi_u};
        for (std::size_t step = 1; step <= span && !frontier.empty(); ++step) {
            ++epoch;
            std::vector<VertexId> next;
            for (VertexId x : frontier) {
                for (VertexId y : g.successors(x)) {
                    if (stamp[y] == epoch) {
                        continue;
                    }
                    stamp[y] = epoch;
                    auto hit = source_of.find(y);
                    if (hit == source_of.end()) {
                        next.push_back(y);
                    } else if (step != span) {
                        report.add({ViolationKind::InterMarkedWalkLength,
                                    {phi_u, y},
                                    "marked vertices joined by a walk of length " + std::to_string(step) +
                                        ", expected " + std::to_string(span),
                                    {}});
                    } else {
                        recovered.emplace(u, hit->second);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (!frontier.empty()) {
            report.add({ViolationKind::InterMarkedWalkLength,
                        {phi_u, frontier.front()},
                        "unmarked walk from marked vertex exceeds length " + std::to_string(span),
                        {}});
        }
    }

    std::set<Edge> expected;
    for (const auto& e : b.source.graph.edges()) {
        expected.insert(e);
    }
    for (const auto& e : recovered) {
        if (!expected.count(e)) {
            report.add({ViolationKind::MarkedAdjacency,
                        {e.first, e.second},
                        "marked adjacency " + std::to_string(e.first) + " -> " + std::to_string(e.second) +
                            " has no input edge",
                        {}});
        }
    }
    for (const auto& e : expected) {
        if (!recovered.count(e)) {
            report.add({ViolationKind::MarkedAdjacency,
                        {e.first, e.second},
                        "input edge " + std::to_string(e.first) + " -> " + std::to_string(e.second) +
                            " has no marked path",
                        {}});
        }
    }
}

void check_runs(const InstanceBundle& b, const NpcParams& params, Symbol c, ValidationReport& report) {
    const LabeledDigraph& g = b.graph.base();
    const std::size_t w = params.width;
    auto in_run = [&](VertexId v) { return g.label(v) == c; };
    std::vector<bool> reached(g.id_bound(), false);
    std::vector<std::uint64_t> stamp(g.id_bound(), 0);
    std::uint64_t epoch = 0;

    for (VertexId s : g.vertices()) {
        if (!in_run(s)) {
            continue;
        }
        auto preds = g.predecessors(s);
        if (std::any_of(preds.begin(), preds.end(), in_run)) {
            continue;
        }
        std::vector<VertexId> frontier{s};
        reached[s] = true;
        for (std::size_t len = 1; !frontier.empty(); ++len) {
            ++epoch;
            std::vector<VertexId> next;
            for (VertexId x : frontier) {
                bool extends = false;
                for (VertexId y : g.successors(x)) {
                    if (!in_run(y)) {
                        continue;
                    }
                    extends = true;
                    if (stamp[y] != epoch) {
                        stamp[y] = epoch;
                        reached[y] = true;
                        next.push_back(y);
                    }
                }
                if (!extends && len != w) {
                    report.add({ViolationKind::RunLength,
                                {s, x},
                                "maximal run of symbol " + std::to_string(c.value) + " has length " +
                                    std::to_string(len) + ", expected " + std::to_string(w),
                                {}});
                }
            }
            if (len == w && !next.empty()) {
                report.add({ViolationKind::RunLength,
                            {s, next.front()},
                            "run of symbol " + std::to_string(c.value) + " longer than " + std::to_string(w),
                            {}});
                break;
            }
            frontier = std::move(next);
        }
    }
    for (VertexId v : g.vertices()) {
        if (in_run(v) && !reached[v]) {
            report.add({ViolationKind::RunLength, {v}, "run of symbol " + std::to_string(c.value) + " on a cycle", {}});
        }
    }
}

} // namespace

ValidationReport check_npc_structure(const InstanceBundle& b) {
    const auto& params = std::get<NpcParams>(b.params);
    ValidationReport report;
    check_inter_marked(b, params, report);
    check_runs(b, params, kDollar, report);
    check_runs(b, params, kHash, report);
    return report;
}

} // namespace dbgmatch::ham
