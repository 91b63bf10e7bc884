#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carp {

struct SweepOptions {
    std::uint64_t seed = 1;
    int trials = 500;
    int min_m = 1;
    int max_m = 7;
    int min_k = 1;
    int max_k = 5;
    int coord_range = 60;
    int jobs = 0;  // 0: hardware concurrency
};

struct SweepViolation {
    int trial = 0;
    std::string message;
};

struct SweepReport {
    int trials = 0;
    int checks_evaluated = 0;
    int odd_share_routes = 0;
    int even_share_routes = 0;
    int degenerate_share_routes = 0;
    std::vector<SweepViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Randomized end-to-end verification: generates seeded instances across both
// generator modes, runs the full bound suite on each, and aggregates
// violations deterministically (sorted by trial id). Trials fan out across
// worker threads; each trial is an independent pure pipeline.
SweepReport run_verification_sweep(const SweepOptions& opts);

}  // namespace carp
