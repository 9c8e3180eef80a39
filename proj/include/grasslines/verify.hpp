#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasslines/fano.hpp"

namespace grasslines {

struct CheckResult {
    std::string id;
    bool pass;
    std::string witness; // reproduction data on failure, summary on success
};

struct SuiteResult {
    std::string suite;
    uint64_t seed;
    long trials;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names(); // thm1 thm2 orbits lemma25 corollary

// Runs one named suite (or "all"). Deterministic given (name, trials, seed).
std::vector<SuiteResult> run_suites(const std::string& name, long trials, uint64_t seed);

std::string report_json(const std::vector<SuiteResult>& results);
std::string report_markdown(const std::vector<SuiteResult>& results);

// component table of a decomposition as a canonical compact string, e.g.
// "vertical(1,0)x2@(1:0) + horizontal(0,1)"
std::string component_table(const std::vector<ZxComponent>& comps);

} // namespace grasslines
