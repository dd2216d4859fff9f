#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plurilab/rational.hpp"
#include "plurilab/reid.hpp"

namespace plurilab::verify {

inline constexpr const char* kVersion = "1.0.0";

struct Check {
    std::string id;
    std::string module_tag;  // reid | wps | infer | bounds | pipeline
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

struct Report {
    std::vector<Check> checks;
    long total() const { return static_cast<long>(checks.size()); }
    long passed() const;
    long failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }
};

/// Runs the golden suite. `filter` keeps only checks whose id or module tag
/// contains it; empty runs everything. Fully deterministic.
Report verify_paper(const std::string& filter = "");

std::string to_text(const Report& rep);
std::string to_json(const Report& rep);

/// Deterministic generator of numerically consistent data: a random basket
/// with r <= 12 and at most 5 points, chi in [-3, 3], and K^3 > 0 solved by
/// congruences so that P_2..P_10 are all integers. Returns nothing when the
/// draw admits no such K^3 (the caller just advances the seed).
std::optional<reid::PluriData> consistent_instance(std::uint64_t seed);

}  // namespace plurilab::verify
