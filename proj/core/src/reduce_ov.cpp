#include "dbgmatch/reduce_ov.hpp"

#include <algorithm>
#include <string>

#include "dbgmatch/error.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch::ov {

namespace {

constexpr Symbol kTwo = sym(2);
constexpr Symbol kThree = sym(3);

std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    return bits;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

SymbolString tail_window(const SymbolString& s, std::size_t k) {
    return SymbolString(s.end() - static_cast<std::ptrdiff_t>(k), s.end());
}

void append_block(SymbolString& out, const Block& b) { out.insert(out.end(), b.begin(), b.end()); }

class SectionedBuilder {
public:
    explicit SectionedBuilder(std::size_t k) : graph_(LabeledDigraph(kSigma), k) {}

    VertexId add(Symbol label, SymbolString implicit, Section section) {
        VertexId v = graph_.mutable_base().add_vertex(label);
        graph_.set_implicit_label(v, std::move(implicit));
        tag(v, section);
        return v;
    }

    void edge(VertexId u, VertexId v) { graph_.mutable_base().add_edge(u, v); }

    VertexId merge(VertexId u, VertexId v) {
        SymbolString label = graph_.implicit_label(u);
        Section section = sections_[u];
        graph_.clear_implicit_label(u);
        graph_.clear_implicit_label(v);
        VertexId w = graph_.mutable_base().merge_vertices(u, v);
        graph_.set_implicit_label(w, std::move(label));
        tag(w, section);
        return w;
    }

    DeBruijnGraph& graph() { return graph_; }
    Section section(VertexId v) const { return sections_[v]; }

private:
    void tag(VertexId v, Section s) {
        if (sections_.size() <= v) {
            sections_.resize(v + 1);
        }
        sections_[v] = s;
    }

    DeBruijnGraph graph_;
    std::vector<Section> sections_;
};

} // namespace

Block f_a(std::uint8_t bit) {
    return bit ? Block{sym(1), sym(1), sym(1), sym(1)} : Block{sym(1), sym(1), sym(0), sym(0)};
}

Block f_b(std::uint8_t bit) {
    return bit ? Block{sym(0), sym(0), sym(0), sym(0)} : Block{sym(0), sym(1), sym(1), sym(0)};
}

std::size_t hamming(const Block& x, const Block& y) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d += x[i] != y[i] ? 1 : 0;
    }
    return d;
}

void check_instance(const OvInstance& ov) {
    const std::size_t n = ov.a.size();
    if (ov.b.size() != n) {
        throw Error(ErrorCode::InvariantViolation, "A and B must have the same size");
    }
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::NotPowerOfTwo, "N = " + std::to_string(n) + " is not a power of two");
    }
    if (ov.dim <= ceil_log2(n)) {
        throw Error(ErrorCode::DimensionTooSmall,
                    "d = " + std::to_string(ov.dim) + " must exceed log N = " + std::to_string(ceil_log2(n)));
    }
    for (const auto* set : {&ov.a, &ov.b}) {
        for (const auto& v : *set) {
            if (v.size() != ov.dim) {
                throw Error(ErrorCode::InvariantViolation, "vector of dimension " + std::to_string(v.size()) +
                                                               ", expected " + std::to_string(ov.dim));
            }
            for (auto bit : v) {
                if (bit > 1) {
                    throw Error(ErrorCode::InvariantViolation, "vector entries must be 0 or 1");
                }
            }
        }
    }
}

OvParams ov_params(std::size_t count, std::size_t dim) {
    if (!is_power_of_two(count)) {
        throw Error(ErrorCode::NotPowerOfTwo, "N = " + std::to_string(count) + " is not a power of two");
    }
    OvParams p;
    p.count = count;
    p.dim = dim;
    p.fan_depth = ceil_log2(count + 1);
    if (p.fan_depth != ceil_log2(count) + 1) {
        throw Error(ErrorCode::InvariantViolation, "ceil(log(N+1)) != log N + 1");
    }
    p.k = p.fan_depth + 4 * (dim + 1);
    p.ell = p.k - 1;
    p.t = 5 * dim + p.fan_depth;
    p.delta = count * p.fan_depth + 2 * (dim + 1) + (2 * dim + 4) * (count - 1);
    return p;
}

SymbolString graph_gadget(std::span<const std::uint8_t> a) {
    SymbolString out;
    for (auto bit : a) {
        append_block(out, f_a(bit));
    }
    append_block(out, f_a(0));
    return out;
}

SymbolString fallback_gadget(std::size_t dim) {
    SymbolString out;
    for (std::size_t i = 0; i < dim; ++i) {
        append_block(out, f_a(0));
    }
    append_block(out, f_a(1));
    return out;
}

SymbolString pattern_gadget(std::span<const std::uint8_t> b) {
    SymbolString out;
    for (auto bit : b) {
        append_block(out, f_b(bit));
    }
    append_block(out, f_b(1));
    return out;
}

std::size_t gadget_cost(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    const SymbolString x = graph_gadget(a);
    const SymbolString y = pattern_gadget(b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d += x[i] != y[i] ? 1 : 0;
    }
    return d;
}

/*
 * Sections, in construction order:
 *  - Synchronization loop: a k-cycle 3 2^l whose 3-vertex also roots the fan-in.
 *  - Selection fan-in: binary tree hanging off the 3-vertex, children labeled
 *    0 then 1, with 2^c leaves at depth c.
 *  - Selection: path i spells the gadget of a_i, path N+1 the fallback gadget;
 *    leaf i (binary counter order) feeds path i.
 *  - Post-selection merge: a 2^l path after every Selection path, merged by
 *    implicit label to a fixpoint; its ends feed the 3-vertex.
 */
OvGraph build_ov_graph(const std::vector<std::vector<std::uint8_t>>& a_set, const OvParams& params) {
    if (a_set.size() != params.count) {
        throw Error(ErrorCode::InvariantViolation, "A has " + std::to_string(a_set.size()) +
                                                       " vectors, parameters expect " + std::to_string(params.count));
    }
    const std::size_t k = params.k;
    const std::size_t ell = params.ell;
    const std::size_t c = params.fan_depth;
    SectionedBuilder b(k);

    // context preceding every fan-in vertex: 2^k 3
    SymbolString sync_context;
    append_run(sync_context, kTwo, k);
    sync_context.push_back(kThree);

    const VertexId three = b.add(kThree, tail_window(sync_context, k), Section::SynchronizationLoop);
    {
        SymbolString ctx = sync_context;
        VertexId prev = three;
        for (std::size_t j = 1; j <= ell; ++j) {
            ctx.push_back(kTwo);
            VertexId v = b.add(kTwo, tail_window(ctx, k), Section::SynchronizationLoop);
            b.edge(prev, v);
            prev = v;
        }
        b.edge(prev, three);
    }

    struct FanNode {
        VertexId id;
        SymbolString context;
    };
    std::vector<FanNode> level{{three, sync_context}};
    for (std::size_t depth = 1; depth <= c; ++depth) {
        std::vector<FanNode> next;
        for (const FanNode& parent : level) {
            for (unsigned bit = 0; bit < 2; ++bit) {
                SymbolString ctx = parent.context;
                ctx.push_back(sym(bit));
                VertexId v = b.add(sym(bit), tail_window(ctx, k), Section::SelectionFanIn);
                b.edge(parent.id, v);
                next.push_back({v, std::move(ctx)});
            }
        }
        level = std::move(next);
    }

    std::vector<VertexId> merge_section;
    for (std::size_t i = 0; i <= params.count; ++i) {
        const SymbolString gadget = i < params.count ? graph_gadget(a_set[i]) : fallback_gadget(params.dim);
        const FanNode& leaf = level[i];
        SymbolString ctx = leaf.context;
        VertexId prev = leaf.id;
        for (Symbol s : gadget) {
            ctx.push_back(s);
            VertexId v = b.add(s, tail_window(ctx, k), Section::Selection);
            b.edge(prev, v);
            prev = v;
        }
        for (std::size_t h = 1; h <= ell; ++h) {
            ctx.push_back(kTwo);
            VertexId v = b.add(kTwo, tail_window(ctx, k), Section::PostSelectionMerge);
            b.edge(prev, v);
            merge_section.push_back(v);
            prev = v;
        }
    }

    // merge equal implicit labels until none repeat
    for (bool changed = true; changed;) {
        changed = false;
        ImplicitIndex seen;
        for (VertexId v : merge_section) {
            if (!b.graph().base().contains(v)) {
                continue;
            }
            auto [it, inserted] = seen.emplace(b.graph().implicit_label(v), v);
            if (!inserted) {
                VertexId w = b.merge(it->second, v);
                merge_section.push_back(w);
                changed = true;
                break;
            }
        }
    }
    for (VertexId v : merge_section) {
        if (b.graph().base().contains(v) && b.graph().base().successors(v).empty()) {
            b.edge(v, three);
        }
    }

    std::vector<VertexId> mapping;
    OvGraph out{b.graph().compacted(&mapping), {}};
    out.sections.resize(out.graph.base().id_bound());
    for (VertexId v = 0; v < mapping.size(); ++v) {
        if (mapping[v] != LabeledDigraph::npos) {
            out.sections[mapping[v]] = b.section(v);
        }
    }
    return out;
}

Pattern build_ov_pattern(const std::vector<std::vector<std::uint8_t>>& b_set, const OvParams& params) {
    SymbolString p;
    for (const auto& vec : b_set) {
        for (std::size_t r = 0; r < params.t; ++r) {
            append_run(p, kTwo, params.ell);
            p.push_back(kThree);
        }
        append_run(p, kTwo, params.fan_depth);
        append(p, pattern_gadget(vec));
    }
    return Pattern(std::move(p));
}

InstanceBundle build_seth_instance(const OvInstance& ov) {
    check_instance(ov);
    const OvParams params = ov_params(ov.size(), ov.dim);
    OvGraph g = build_ov_graph(ov.a, params);
    InstanceBundle bundle;
    bundle.graph = std::move(g.graph);
    bundle.sections = std::move(g.sections);
    bundle.pattern = build_ov_pattern(ov.b, params);
    bundle.delta = params.delta;
    bundle.params = params;
    return bundle;
}

std::set<std::size_t> three_positions(const Pattern& p) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.symbols()[i] == kThree) {
            out.insert(i + 1);
        }
    }
    return out;
}

ProbeReport check_ov_optimality_probes(const InstanceBundle& b, const std::set<std::size_t>& forbidden) {
    const DpOptions options{std::nullopt, false};
    ProbeReport probe;
    probe.unconstrained = min_pattern_substitutions(b.graph.base(), b.pattern, options).cost;
    probe.constrained = constrained_pattern_dp(b.graph.base(), b.pattern, forbidden, options).cost;
    if (!probe.equal()) {
        auto show = [](Cost c) { return c.is_finite() ? std::to_string(c.value()) : std::string("inf"); };
        probe.report.add({ViolationKind::ProbeMismatch,
                          {},
                          "constrained cost " + show(probe.constrained) + " differs from unconstrained " +
                              show(probe.unconstrained),
                          {}});
    }
    return probe;
}

ProbeReport check_ov_optimality_probes(const InstanceBundle& b) {
    return check_ov_optimality_probes(b, three_positions(b.pattern));
}

ValidationReport check_ov_structure(const InstanceBundle& b) {
    const auto& params = std::get<OvParams>(b.params);
    const LabeledDigraph& g = b.graph.base();
    ValidationReport report;
    std::size_t loop = 0;
    std::size_t threes = 0;
    for (VertexId v : g.vertices()) {
        if (b.sections.at(v) == Section::SynchronizationLoop) {
            ++loop;
            threes += g.label(v) == kThree ? 1 : 0;
        }
    }
    if (loop != params.k || threes != 1) {
        report.add({ViolationKind::LoopStructure,
                    {},
                    "synchronization loop has " + std::to_string(loop) + " vertices and " +
                        std::to_string(threes) + " threes",
                    {}});
    }
    ImplicitIndex seen;
    for (VertexId v : g.vertices()) {
        auto [it, inserted] = seen.emplace(b.graph.implicit_label(v), v);
        if (!inserted) {
            report.add({ViolationKind::DuplicateImplicitLabel, {it->second, v}, "implicit label repeats", {}});
        }
    }
    return report;
}

} // namespace dbgmatch::ov
