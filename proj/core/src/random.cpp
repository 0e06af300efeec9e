#include "dbgmatch/random.hpp"

#include <algorithm>

#include "dbgmatch/error.hpp"
#include "dbgmatch/reduce_ham.hpp"
#include "dbgmatch/reduce_ov.hpp"

namespace dbgmatch::gen {

namespace {

constexpr std::size_t kMaxAttempts = 100'000;

bool degrees_ok(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<bool> out(n), in(n);
    for (const auto& [t, h] : edges) {
        out[t] = true;
        in[h] = true;
    }
    return std::all_of(out.begin(), out.end(), [](bool b) { return b; }) &&
           std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

} // namespace

HamInstance random_ham(Rng& rng, const HamGenOptions& options) {
    const std::size_t n = options.n;
    if (n < 2 || (options.two_cycle_free && n < 3)) {
        throw Error(ErrorCode::Range, "too few vertices for a loop-free instance with nonzero degrees");
    }
    std::vector<Edge> candidates;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = options.two_cycle_free ? u + 1 : 0; v < n; ++v) {
            if (u != v) {
                candidates.emplace_back(u, v);
            }
        }
    }
    const std::size_t hi = std::min(options.edge_factor * n, candidates.size());
    if (hi < n) {
        throw Error(ErrorCode::Range, "edge budget below n");
    }
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::size_t m = options.edges;
        if (m == 0) {
            m = std::uniform_int_distribution<std::size_t>(n, hi)(rng);
        }
        if (m > candidates.size()) {
            throw Error(ErrorCode::Range, "requested more edges than vertex pairs");
        }
        std::vector<Edge> pool = candidates;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(m);
        if (options.two_cycle_free) {
            std::bernoulli_distribution flip(0.5);
            for (auto& e : pool) {
                if (flip(rng)) {
                    std::swap(e.first, e.second);
                }
            }
        }
        if (degrees_ok(n, pool)) {
            return HamInstance::from_edges(n, pool);
        }
    }
    throw Error(ErrorCode::InfeasibleRequest, "could not sample an instance with nonzero degrees");
}

OvInstance random_ov(Rng& rng, std::size_t count, std::size_t dim) {
    OvInstance ov;
    ov.dim = dim;
    std::bernoulli_distribution bit(0.5);
    for (auto* set : {&ov.a, &ov.b}) {
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<std::uint8_t> v(dim);
            for (auto& x : v) {
                x = bit(rng) ? 1 : 0;
            }
            set->push_back(std::move(v));
        }
    }
    ov::check_instance(ov);
    return ov;
}

LabeledDigraph random_graph(Rng& rng, std::size_t n, unsigned sigma, double edge_probability) {
    LabeledDigraph g(sigma);
    std::uniform_int_distribution<unsigned> label(0, sigma - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_vertex(sym(label(rng)));
    }
    std::bernoulli_distribution coin(edge_probability);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Pattern random_pattern(Rng& rng, std::size_t m, unsigned sigma) {
    std::uniform_int_distribution<unsigned> label(0, sigma - 1);
    SymbolString s(m);
    for (auto& c : s) {
        c = sym(label(rng));
    }
    return Pattern(std::move(s));
}

std::vector<HamInstance> all_two_cycle_free(std::size_t n, std::size_t edge_factor) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    if (pairs.size() > 12) {
        throw Error(ErrorCode::SizeCap, "exhaustive enumeration limited to n <= 5");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        total *= 3;
    }
    std::vector<HamInstance> out;
    std::vector<Edge> edges;
    for (std::size_t code = 0; code < total; ++code) {
        edges.clear();
        std::size_t c = code;
        for (const auto& [u, v] : pairs) {
            switch (c % 3) {
            case 1: edges.emplace_back(u, v); break;
            case 2: edges.emplace_back(v, u); break;
            default: break;
            }
            c /= 3;
        }
        if (edges.size() > edge_factor * n || !degrees_ok(n, edges)) {
            continue;
        }
        out.push_back(HamInstance::from_edges(n, edges));
    }
    return out;
}

} // namespace dbgmatch::gen
