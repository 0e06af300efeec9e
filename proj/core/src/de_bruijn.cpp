#include "dbgmatch/de_bruijn.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <string_view>

#include "dbgmatch/error.hpp"

namespace dbgmatch {

namespace {

std::string_view bytes(const SymbolString& s, std::size_t offset, std::size_t len) {
    return {reinterpret_cast<const char*>(s.data()) + offset, len};
}

std::string render(const SymbolString& s) {
    std::string out;
    for (Symbol c : s) {
        out += std::to_string(c.value);
    }
    return out;
}

} // namespace

DeBruijnGraph::DeBruijnGraph(LabeledDigraph base, std::size_t k)
    : base_(std::move(base)), k_(k), implicit_(base_.id_bound()) {
    if (k_ == 0) {
        throw Error(ErrorCode::Range, "de Bruijn order must be at least 1");
    }
}

const SymbolString& DeBruijnGraph::implicit_label(VertexId v) const {
    if (!has_implicit_label(v)) {
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " has no implicit label");
    }
    return implicit_[v];
}

void DeBruijnGraph::set_implicit_label(VertexId v, SymbolString label) {
    if (!base_.contains(v)) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
    }
    if (label.size() != k_) {
        throw Error(ErrorCode::Range, "implicit label of length " + std::to_string(label.size()) +
                                          " for order " + std::to_string(k_));
    }
    if (label.back() != base_.label(v)) {
        throw Error(ErrorCode::LabelMismatch,
                    "implicit label of vertex " + std::to_string(v) + " does not end with its label");
    }
    if (implicit_.size() < base_.id_bound()) {
        implicit_.resize(base_.id_bound());
    }
    implicit_[v] = std::move(label);
}

void DeBruijnGraph::clear_implicit_label(VertexId v) {
    if (v < implicit_.size()) {
        SymbolString().swap(implicit_[v]);
    }
}

bool DeBruijnGraph::has_implicit_label(VertexId v) const {
    return base_.contains(v) && v < implicit_.size() && implicit_[v].size() == k_;
}

std::optional<VertexId> DeBruijnGraph::find(const SymbolString& label) const {
    for (VertexId v : base_.vertices()) {
        if (has_implicit_label(v) && implicit_[v] == label) {
            return v;
        }
    }
    return std::nullopt;
}

DeBruijnGraph DeBruijnGraph::compacted(std::vector<VertexId>* old_to_new) const {
    std::vector<VertexId> mapping;
    DeBruijnGraph out(base_.compacted(&mapping), k_);
    for (VertexId v : base_.vertices()) {
        if (has_implicit_label(v)) {
            out.set_implicit_label(mapping[v], implicit_[v]);
        }
    }
    if (old_to_new) {
        *old_to_new = std::move(mapping);
    }
    return out;
}

DeBruijnGraph compute_implicit_labels(const LabeledDigraph& g, std::size_t k) {
    DeBruijnGraph out(g, k);
    std::vector<std::uint64_t> stamp(g.id_bound(), 0);
    std::uint64_t epoch = 0;

    for (VertexId v : g.vertices()) {
        // layers[j]: vertices with a walk of j edges ending at v
        std::vector<std::vector<VertexId>> layers(k);
        layers[0] = {v};
        for (std::size_t j = 1; j < k; ++j) {
            ++epoch;
            for (VertexId x : layers[j - 1]) {
                for (VertexId y : g.predecessors(x)) {
                    if (stamp[y] != epoch) {
                        stamp[y] = epoch;
                        layers[j].push_back(y);
                    }
                }
            }
        }
        // keep only vertices lying on a walk of the full length
        for (std::size_t j = k - 1; j-- > 0;) {
            ++epoch;
            for (VertexId y : layers[j + 1]) {
                stamp[y] = epoch;
            }
            std::erase_if(layers[j], [&](VertexId x) {
                auto preds = g.predecessors(x);
                return std::none_of(preds.begin(), preds.end(),
                                    [&](VertexId y) { return stamp[y] == epoch; });
            });
        }
        if (layers[k - 1].empty() || layers[0].empty()) {
            throw Error(ErrorCode::NoIncomingWalk,
                        "vertex " + std::to_string(v) + " has no incoming walk of length " +
                            std::to_string(k - 1));
        }
        SymbolString label(k);
        for (std::size_t j = 0; j < k; ++j) {
            Symbol s = g.label(layers[j].front());
            for (VertexId x : layers[j]) {
                if (g.label(x) != s) {
                    throw Error(ErrorCode::AmbiguousImplicitLabel,
                                "backward walks into vertex " + std::to_string(v) + " disagree " +
                                    std::to_string(j) + " steps back");
                }
            }
            label[k - 1 - j] = s;
        }
        out.set_implicit_label(v, std::move(label));
    }
    return out;
}

ValidationReport validate_de_bruijn(const DeBruijnGraph& dbg) {
    ValidationReport report;
    const LabeledDigraph& g = dbg.base();
    const std::size_t k = dbg.order();
    const std::vector<VertexId> vertices = g.vertices();

    std::vector<VertexId> labeled;
    for (VertexId v : vertices) {
        if (dbg.has_implicit_label(v)) {
            labeled.push_back(v);
        } else {
            report.add({ViolationKind::IllDefinedImplicitLabel, {v}, "no implicit label stored", {}});
        }
    }

    // (i) uniqueness
    std::unordered_map<std::string_view, VertexId> first;
    first.reserve(labeled.size());
    for (VertexId v : labeled) {
        const SymbolString& lv = dbg.implicit_label(v);
        auto [it, inserted] = first.emplace(bytes(lv, 0, k), v);
        if (!inserted) {
            report.add({ViolationKind::DuplicateImplicitLabel,
                        {it->second, v},
                        "implicit label " + render(lv) + " carried twice",
                        {}});
        }
    }

    // (ii) every pair x = beta S, y = S alpha must be joined by an edge
    std::unordered_map<std::string_view, std::vector<VertexId>> by_suffix;
    by_suffix.reserve(labeled.size());
    for (VertexId x : labeled) {
        by_suffix[bytes(dbg.implicit_label(x), 1, k - 1)].push_back(x);
    }
    for (VertexId y : labeled) {
        const SymbolString& ly = dbg.implicit_label(y);
        auto it = by_suffix.find(bytes(ly, 0, k - 1));
        if (it == by_suffix.end()) {
            continue;
        }
        for (VertexId x : it->second) {
            if (!g.has_edge(x, y)) {
                report.add({ViolationKind::MissingEdge,
                            {x, y},
                            "edge " + render(dbg.implicit_label(x)) + " -> " + render(ly) + " missing",
                            {}});
            }
        }
    }

    // (iii) every walk of at most k vertices ending at x spells a suffix of its implicit label
    std::vector<std::span<const VertexId>> preds(g.id_bound());
    std::vector<Symbol> symbol(g.id_bound());
    for (VertexId v : vertices) {
        preds[v] = g.predecessors(v);
        symbol[v] = g.label(v);
    }
    // walks over label-consistent edges spell suffixes; search only near a mismatch
    std::vector<char> suspect(g.id_bound(), 0);
    std::vector<VertexId> frontier;
    for (VertexId x : labeled) {
        const SymbolString& lx = dbg.implicit_label(x);
        bool bad = lx[k - 1] != symbol[x];
        for (VertexId y : preds[x]) {
            if (bad) {
                break;
            }
            bad = !dbg.has_implicit_label(y) || bytes(dbg.implicit_label(y), 1, k - 1) != bytes(lx, 0, k - 1);
        }
        if (bad) {
            suspect[x] = 1;
            frontier.push_back(x);
        }
    }
    for (std::size_t step = 1; step + 1 < k && !frontier.empty(); ++step) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (VertexId w : g.successors(v)) {
                if (!suspect[w]) {
                    suspect[w] = 1;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::uint64_t> stamp(g.id_bound(), 0);
    std::uint64_t epoch = 0;
    struct State {
        VertexId vertex;
        std::size_t parent; // index into the previous layer
    };
    std::vector<std::vector<State>> layers(k);
    for (VertexId x : labeled) {
        if (!suspect[x]) {
            continue;
        }
        const SymbolString& lx = dbg.implicit_label(x);
        for (auto& layer : layers) {
            layer.clear();
        }
        std::size_t depth = 1;
        layers[0].push_back(State{x, 0});
        bool failed = false;
        for (std::size_t j = 0; j < k && !failed; ++j) {
            if (j > 0) {
                ++epoch;
                std::vector<State>& next = layers[depth];
                const auto& prev = layers[depth - 1];
                for (std::size_t idx = 0; idx < prev.size(); ++idx) {
                    for (VertexId y : preds[prev[idx].vertex]) {
                        if (stamp[y] != epoch) {
                            stamp[y] = epoch;
                            next.push_back(State{y, idx});
                        }
                    }
                }
                if (next.empty()) {
                    break;
                }
                ++depth;
            }
            const Symbol expected = lx[k - 1 - j];
            for (const State& s : layers[depth - 1]) {
                if (symbol[s.vertex] == expected) {
                    continue;
                }
                Walk witness;
                std::size_t idx = static_cast<std::size_t>(&s - layers[depth - 1].data());
                for (std::size_t level = depth; level-- > 0;) {
                    witness.vertices.push_back(layers[level][idx].vertex);
                    idx = layers[level][idx].parent;
                }
                report.add({ViolationKind::IllDefinedImplicitLabel,
                            {x, s.vertex},
                            "walk of " + std::to_string(j + 1) + " vertices into " + std::to_string(x) +
                                " disagrees with implicit label " + render(lx),
                            std::move(witness)});
                failed = true;
                break;
            }
        }
    }
    return report;
}

DeBruijnGraph full_de_bruijn(unsigned sigma, std::size_t k, std::size_t vertex_cap) {
    if (sigma == 0 || sigma > 256 || k == 0) {
        throw Error(ErrorCode::Range, "full de Bruijn graph needs 1 <= sigma <= 256 and k >= 1");
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > vertex_cap / sigma) {
            throw Error(ErrorCode::SizeCap, "sigma^k exceeds the cap of " + std::to_string(vertex_cap));
        }
        count *= sigma;
    }
    if (count > vertex_cap) {
        throw Error(ErrorCode::SizeCap, "sigma^k exceeds the cap of " + std::to_string(vertex_cap));
    }

    LabeledDigraph g(sigma);
    for (std::size_t id = 0; id < count; ++id) {
        g.add_vertex(sym(static_cast<unsigned>(id % sigma)));
    }
    for (std::size_t id = 0; id < count; ++id) {
        std::size_t shifted = (id * sigma) % count;
        for (unsigned a = 0; a < sigma; ++a) {
            g.add_edge(static_cast<VertexId>(id), static_cast<VertexId>(shifted + a));
        }
    }
    DeBruijnGraph out(std::move(g), k);
    for (std::size_t id = 0; id < count; ++id) {
        SymbolString label(k);
        std::size_t rest = id;
        for (std::size_t pos = k; pos-- > 0;) {
            label[pos] = sym(static_cast<unsigned>(rest % sigma));
            rest /= sigma;
        }
        out.set_implicit_label(static_cast<VertexId>(id), std::move(label));
    }
    return out;
}

ImplicitIndex build_implicit_index(const DeBruijnGraph& g) {
    ImplicitIndex index;
    for (VertexId v : g.base().vertices()) {
        if (g.has_implicit_label(v)) {
            index.emplace(g.implicit_label(v), v);
        }
    }
    return index;
}

} // namespace dbgmatch
