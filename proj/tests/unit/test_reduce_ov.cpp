#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/error.hpp"
#include "dbgmatch/oracles.hpp"
#include "dbgmatch/reduce_ov.hpp"

using namespace dbgmatch;
using namespace dbgmatch::ov;

namespace {

Block block(std::string_view text) {
    Block out{};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = sym(static_cast<unsigned>(text[i] - '0'));
    }
    return out;
}

std::vector<std::uint8_t> bits_of(unsigned value, std::size_t d) {
    std::vector<std::uint8_t> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = (value >> (d - 1 - i)) & 1;
    }
    return out;
}

std::size_t dot(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), std::size_t{0});
}

const OvInstance kOrthogonal{2, {{1, 0}, {0, 1}}, {{1, 1}, {1, 0}}};
const OvInstance kNoPair{2, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}};

} // namespace

TEST_SUITE("reduce_ov") {

TEST_CASE("gadget blocks") {
    CHECK(f_a(0) == block("1100"));
    CHECK(f_a(1) == block("1111"));
    CHECK(f_b(0) == block("0110"));
    CHECK(f_b(1) == block("0000"));
    CHECK(hamming(f_a(1), f_b(1)) == 4);
    CHECK(hamming(f_a(0), f_b(1)) == 2);
    CHECK(hamming(f_a(0), f_b(0)) == 2);
    CHECK(hamming(f_a(1), f_b(0)) == 2);
}

TEST_CASE("gadget cost encodes the inner product") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (unsigned x = 0; x < (1u << d); ++x) {
            for (unsigned y = 0; y < (1u << d); ++y) {
                const auto a = bits_of(x, d);
                const auto b = bits_of(y, d);
                const std::size_t cost = gadget_cost(a, b);
                if (dot(a, b) == 0) {
                    CHECK(cost == 2 * (d + 1));
                } else {
                    CHECK(cost >= 2 * d + 4);
                }
            }
        }
    }
}

TEST_CASE("parameters") {
    const OvParams p = ov_params(2, 2);
    CHECK(p.fan_depth == 2);
    CHECK(p.k == 14);
    CHECK(p.ell == 13);
    CHECK(p.t == 12);
    CHECK(p.delta == 18);
    CHECK(ov_params(4, 3).delta == 50);
    try {
        ov_params(3, 4);
        FAIL("N = 3 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPowerOfTwo);
    }
    try {
        check_instance(OvInstance{2, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}});
        FAIL("d = log N accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionTooSmall);
    }
}

TEST_CASE("pattern layout") {
    const OvParams p = ov_params(2, 2);
    const Pattern pat = build_ov_pattern({{1, 0}, {0, 1}}, p);
    CHECK(pat.size() == 364);
    CHECK(pat.size() == p.count * (p.t * (p.ell + 1) + p.fan_depth + 4 * (p.dim + 1)));
    CHECK(three_positions(pat).size() == p.count * p.t);

    const std::size_t start = p.t * (p.ell + 1) + p.fan_depth;
    const SymbolString gadget(pat.symbols().begin() + start, pat.symbols().begin() + start + 12);
    SymbolString expected;
    for (auto b : {block("0000"), block("0110"), block("0000")}) {
        expected.insert(expected.end(), b.begin(), b.end());
    }
    CHECK(gadget == expected);
}

TEST_CASE("graph sections") {
    const OvParams p = ov_params(2, 2);
    const OvGraph g = build_ov_graph(kOrthogonal.a, p);
    const LabeledDigraph& base = g.graph.base();
    auto count = [&](Section s) {
        std::size_t n = 0;
        for (VertexId v : base.vertices()) {
            n += g.sections[v] == s ? 1 : 0;
        }
        return n;
    };
    CHECK(count(Section::Selection) == 3 * 12);
    CHECK(count(Section::SelectionFanIn) == 2 + 4);
    CHECK(count(Section::SynchronizationLoop) == p.k);

    std::size_t threes = 0;
    for (VertexId v : base.vertices()) {
        if (g.sections[v] == Section::SynchronizationLoop && base.label(v) == sym(3)) {
            ++threes;
        }
    }
    CHECK(threes == 1);

    ImplicitIndex seen;
    for (VertexId v : base.vertices()) {
        if (g.sections[v] != Section::PostSelectionMerge) {
            continue;
        }
        CHECK(base.label(v) == sym(2));
        CHECK(base.successors(v).size() == 1);
        CHECK(seen.emplace(g.graph.implicit_label(v), v).second);
    }
    CHECK(validate_de_bruijn(g.graph).ok());
}

TEST_CASE("bundles validate and decide orthogonality") {
    for (const OvInstance* ov : {&kOrthogonal, &kNoPair}) {
        const InstanceBundle b = build_seth_instance(*ov);
        CHECK(b.delta == 18);
        CHECK(validate_de_bruijn(b.graph).ok());
        CHECK(check_ov_structure(b).ok());
        const MatchResult r = min_pattern_substitutions(b.graph.base(), b.pattern);
        const bool within = r.cost.is_finite() && r.cost.value() <= b.delta;
        CHECK(within == oracle::orthogonal_vectors(*ov).orthogonal);
        CHECK(replay_witness(b.graph.base(), b.pattern, r));
    }
}

TEST_CASE("probes") {
    const ProbeReport yes = check_ov_optimality_probes(build_seth_instance(kOrthogonal));
    CHECK(yes.equal());
    CHECK(yes.report.ok());
    CHECK(yes.unconstrained <= Cost(18));

    const ProbeReport no = check_ov_optimality_probes(build_seth_instance(kNoPair));
    CHECK(no.equal());
    CHECK(no.unconstrained > Cost(18));

    CHECK(check_ov_optimality_probes(build_seth_instance(kOrthogonal), {}).equal());
}

}
