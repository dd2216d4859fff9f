// Acceptance harness: runs the full golden suite and prints one line per
// acceptance criterion. Exit status 0 only when every criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "plurilab/report.hpp"

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<std::string> prefixes;
};

bool starts_with_any(const std::string& id, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes)
        if (id.rfind(p, 0) == 0) return true;
    return false;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "correction-term monotonicity and boundary equalities",
         {"reid.monotonicity", "reid.boundary"}},
        {2, "hypersurface invariants cross-validated against the formula", {"wps.X"}},
        {3, "basket inference and round trips", {"infer."}},
        {4, "chi arithmetic from the Hodge numbers", {"wps.chi."}},
        {5, "second plurigenus under negative chi", {"reid.P2."}},
        {6, "beta sequence limits and monotonicity", {"bounds.beta"}},
        {7, "derivation-chain checkpoints",
         {"bounds.case1", "bounds.case2", "bounds.typeI", "bounds.typeII", "bounds.d5_",
          "bounds.a_", "bounds.prop_b", "bounds.star", "bounds.minbir"}},
        {8, "assembled thresholds", {"bounds.thm", "bounds.main_theorem", "bounds.corollary"}},
        {9, "optimality witnesses", {"pipeline."}},
    };

    auto rep = plurilab::verify::verify_paper();
    int exit_code = 0;
    for (const auto& crit : criteria) {
        long total = 0, passed = 0;
        std::vector<std::string> failures;
        for (const auto& c : rep.checks) {
            if (!starts_with_any(c.id, crit.prefixes)) continue;
            ++total;
            if (c.pass)
                ++passed;
            else
                failures.push_back(c.id + " (expected " + c.expected + ", got " + c.actual + ")");
        }
        bool ok = total > 0 && passed == total;
        if (!ok) exit_code = 1;
        std::printf("criterion %d: %s  [%ld/%ld]  %s\n", crit.number, ok ? "PASS" : "FAIL", passed,
                    total, crit.title);
        for (const auto& f : failures) std::printf("    failed: %s\n", f.c_str());
    }
    // every golden check must belong to some criterion
    for (const auto& c : rep.checks) {
        bool claimed = false;
        for (const auto& crit : criteria) claimed = claimed || starts_with_any(c.id, crit.prefixes);
        if (!claimed) {
            std::printf("unclaimed check: %s\n", c.id.c_str());
            exit_code = 1;
        }
    }
    return exit_code;
}
