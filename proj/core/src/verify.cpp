#include "dbgmatch/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/error.hpp"
#include "dbgmatch/oracles.hpp"
#include "dbgmatch/reduce_ham.hpp"
#include "dbgmatch/reduce_ov.hpp"

namespace dbgmatch::verify {

namespace {

using Clock = std::chrono::steady_clock;

Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }

Tri to_tri(Verdict v) {
    switch (v) {
    case Verdict::Feasible: return Tri::True;
    case Verdict::Infeasible: return Tri::False;
    case Verdict::Indeterminate: break;
    }
    return Tri::Indeterminate;
}

void settle(VerificationRecord& r) {
    r.agreement = !r.indeterminate() && r.oracle == r.matcher;
}

} // namespace

std::string_view to_string(Tri t) {
    switch (t) {
    case Tri::False: return "no";
    case Tri::True: return "yes";
    case Tri::Indeterminate: break;
    }
    return "indeterminate";
}

VerificationRecord verify_npc(const HamInstance& g, const NpcVerifyOptions& options, std::string descriptor) {
    VerificationRecord r;
    r.descriptor = std::move(descriptor);
    try {
        auto t0 = Clock::now();
        const InstanceBundle b = ham::build_npc_instance(g, {options.skip_gadget, options.edge_factor});
        r.build_time = Clock::now() - t0;
        r.delta = b.delta;
        r.validator_clean = validate_de_bruijn(b.graph).ok();
        r.structure_clean = ham::check_npc_structure(b).ok();

        t0 = Clock::now();
        r.oracle = to_tri(oracle::hamiltonian(g).hamiltonian);
        r.oracle_time = Clock::now() - t0;

        t0 = Clock::now();
        const MatchResult m = min_graph_substitutions(b.graph.base(), b.pattern, b.delta, {options.expansion_cap});
        r.matcher_time = Clock::now() - t0;
        r.matcher = to_tri(m.verdict);
        r.cost = m.cost;
        if (m.feasible()) {
            r.witness_replays = replay_witness(b.graph.base(), b.pattern, m);
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    settle(r);
    return r;
}

VerificationRecord verify_seth(const OvInstance& ov, std::string descriptor) {
    VerificationRecord r;
    r.descriptor = std::move(descriptor);
    try {
        auto t0 = Clock::now();
        const InstanceBundle b = ov::build_seth_instance(ov);
        r.build_time = Clock::now() - t0;
        r.delta = b.delta;
        r.validator_clean = validate_de_bruijn(b.graph).ok();
        r.structure_clean = ov::check_ov_structure(b).ok();

        t0 = Clock::now();
        r.oracle = to_tri(oracle::orthogonal_vectors(ov).orthogonal);
        r.oracle_time = Clock::now() - t0;

        t0 = Clock::now();
        const MatchResult m = min_pattern_substitutions(b.graph.base(), b.pattern);
        r.matcher_time = Clock::now() - t0;
        r.cost = m.cost;
        r.matcher = to_tri(m.cost.is_finite() && m.cost.value() <= b.delta);
        if (m.feasible()) {
            r.witness_replays = replay_witness(b.graph.base(), b.pattern, m);
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    settle(r);
    return r;
}

std::vector<VerificationRecord> run_parallel(std::size_t count,
                                             const std::function<VerificationRecord(std::size_t)>& job,
                                             std::size_t workers) {
    std::vector<VerificationRecord> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            out[i] = job(i);
        }
    };
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    return out;
}

std::string format_record(const VerificationRecord& r) {
    std::ostringstream os;
    os << r.descriptor << ": oracle=" << to_string(r.oracle) << " matcher=" << to_string(r.matcher)
       << " cost=";
    if (r.cost.is_finite()) {
        os << r.cost.value();
    } else {
        os << "inf";
    }
    os << " delta=" << r.delta << " validator=" << (r.validator_clean ? "clean" : "violations")
       << " structure=" << (r.structure_clean ? "clean" : "violations")
       << " replay=" << (r.witness_replays ? "ok" : "failed") << " result="
       << (r.passed() ? "pass" : (r.indeterminate() ? "indeterminate" : "fail"));
    if (!r.error.empty()) {
        os << " error=\"" << r.error << '"';
    }
    return os.str();
}

} // namespace dbgmatch::verify
