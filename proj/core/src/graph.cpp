#include "dbgmatch/graph.hpp"

#include <algorithm>
#include <string>

#include "dbgmatch/error.hpp"

namespace dbgmatch {

namespace {

bool sorted_insert(std::vector<VertexId>& list, VertexId id) {
    auto it = std::lower_bound(list.begin(), list.end(), id);
    if (it != list.end() && *it == id) {
        return false;
    }
    list.insert(it, id);
    return true;
}

bool sorted_erase(std::vector<VertexId>& list, VertexId id) {
    auto it = std::lower_bound(list.begin(), list.end(), id);
    if (it == list.end() || *it != id) {
        return false;
    }
    list.erase(it);
    return true;
}

} // namespace

LabeledDigraph::LabeledDigraph(unsigned sigma) : sigma_(sigma) {}

VertexId LabeledDigraph::add_vertex(Symbol label) {
    if (label.value >= sigma_) {
        throw Error(ErrorCode::AlphabetRange, "label " + std::to_string(label.value) +
                                                  " outside alphabet of size " + std::to_string(sigma_));
    }
    nodes_.push_back(Node{label, true, {}, {}});
    ++live_;
    return static_cast<VertexId>(nodes_.size() - 1);
}

void LabeledDigraph::throw_unknown(VertexId v) {
    throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
}

void LabeledDigraph::add_edge(VertexId tail, VertexId head) {
    require_live(tail);
    require_live(head);
    if (sorted_insert(nodes_[tail].out, head)) {
        sorted_insert(nodes_[head].in, tail);
        ++edges_;
    }
}

bool LabeledDigraph::remove_edge(VertexId tail, VertexId head) {
    require_live(tail);
    require_live(head);
    if (!sorted_erase(nodes_[tail].out, head)) {
        return false;
    }
    sorted_erase(nodes_[head].in, tail);
    --edges_;
    return true;
}

bool LabeledDigraph::has_edge(VertexId tail, VertexId head) const {
    require_live(tail);
    require_live(head);
    const auto& out = nodes_[tail].out;
    return std::binary_search(out.begin(), out.end(), head);
}

VertexId LabeledDigraph::merge_vertices(VertexId u, VertexId v) {
    require_live(u);
    require_live(v);
    if (u == v) {
        throw Error(ErrorCode::SameVertex, "cannot merge vertex " + std::to_string(u) + " with itself");
    }
    if (nodes_[u].label != nodes_[v].label) {
        throw Error(ErrorCode::LabelMismatch, "cannot merge vertices " + std::to_string(u) + " and " +
                                                  std::to_string(v) + " with different labels");
    }

    std::vector<VertexId> outs;
    std::vector<VertexId> ins;
    for (VertexId x : {u, v}) {
        outs.insert(outs.end(), nodes_[x].out.begin(), nodes_[x].out.end());
        ins.insert(ins.end(), nodes_[x].in.begin(), nodes_[x].in.end());
    }
    for (VertexId x : {u, v}) {
        for (VertexId head : std::vector<VertexId>(nodes_[x].out)) {
            remove_edge(x, head);
        }
        for (VertexId tail : std::vector<VertexId>(nodes_[x].in)) {
            remove_edge(tail, x);
        }
    }
    Symbol label = nodes_[u].label;
    nodes_[u].live = false;
    nodes_[v].live = false;
    live_ -= 2;

    VertexId w = add_vertex(label);
    auto redirect = [&](VertexId x) { return (x == u || x == v) ? w : x; };
    for (VertexId head : outs) {
        add_edge(w, redirect(head));
    }
    for (VertexId tail : ins) {
        add_edge(redirect(tail), w);
    }
    return w;
}

void LabeledDigraph::relabel(VertexId v, Symbol label) {
    require_live(v);
    if (label.value >= sigma_) {
        throw Error(ErrorCode::AlphabetRange, "label " + std::to_string(label.value) +
                                                  " outside alphabet of size " + std::to_string(sigma_));
    }
    nodes_[v].label = label;
}

std::vector<VertexId> LabeledDigraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_);
    for (VertexId v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].live) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Edge> LabeledDigraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (VertexId v = 0; v < nodes_.size(); ++v) {
        if (!nodes_[v].live) {
            continue;
        }
        for (VertexId head : nodes_[v].out) {
            out.emplace_back(v, head);
        }
    }
    return out;
}

LabeledDigraph LabeledDigraph::compacted(std::vector<VertexId>* old_to_new) const {
    std::vector<VertexId> mapping(nodes_.size(), npos);
    LabeledDigraph out(sigma_);
    for (VertexId v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v].live) {
            mapping[v] = out.add_vertex(nodes_[v].label);
        }
    }
    for (const auto& [tail, head] : edges()) {
        out.add_edge(mapping[tail], mapping[head]);
    }
    if (old_to_new) {
        *old_to_new = std::move(mapping);
    }
    return out;
}

bool LabeledDigraph::is_walk(const Walk& walk) const {
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
        if (!contains(walk.vertices[i])) {
            return false;
        }
        if (i > 0 && !has_edge(walk.vertices[i - 1], walk.vertices[i])) {
            return false;
        }
    }
    return true;
}

} // namespace dbgmatch
