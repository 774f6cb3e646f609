#pragma once

// Release gate: the eleven checks that must hold for a build to ship.
// Each criterion reports pass/fail, wall time, and a one-line summary;
// randomized sweeps derive their streams from a single master seed.

#include <cstdint>
#include <string>
#include <vector>

namespace qplane {

struct AcceptanceConfig {
    std::uint64_t seed = 7;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string details;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qplane
