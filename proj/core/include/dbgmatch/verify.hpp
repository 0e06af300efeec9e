#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dbgmatch/instance.hpp"
#include "dbgmatch/matchers.hpp"

namespace dbgmatch::verify {

enum class Tri { False, True, Indeterminate };

std::string_view to_string(Tri t);

struct VerificationRecord {
    std::string descriptor;
    Tri oracle = Tri::Indeterminate;
    Tri matcher = Tri::Indeterminate;
    bool agreement = false;
    bool validator_clean = false;
    bool structure_clean = false;
    bool witness_replays = true;
    Cost cost = Cost::infinity();
    std::uint64_t delta = 0;
    std::string error;
    std::chrono::duration<double> build_time{};
    std::chrono::duration<double> oracle_time{};
    std::chrono::duration<double> matcher_time{};

    bool indeterminate() const noexcept {
        return oracle == Tri::Indeterminate || matcher == Tri::Indeterminate;
    }
    /// Agreement with clean validation and structure checks.
    bool passed() const noexcept {
        return agreement && validator_clean && structure_clean && witness_replays;
    }
};

struct NpcVerifyOptions {
    bool skip_gadget = false;
    std::uint64_t expansion_cap = kDefaultExpansionCap;
    std::size_t edge_factor = kDefaultEdgeFactor;
};

VerificationRecord verify_npc(const HamInstance& g, const NpcVerifyOptions& options = {},
                              std::string descriptor = {});

VerificationRecord verify_seth(const OvInstance& ov, std::string descriptor = {});

/// Runs `count` jobs over `workers` threads; results are ordered by job index.
std::vector<VerificationRecord> run_parallel(std::size_t count,
                                             const std::function<VerificationRecord(std::size_t)>& job,
                                             std::size_t workers);

std::string format_record(const VerificationRecord& r);

} // namespace dbgmatch::verify
