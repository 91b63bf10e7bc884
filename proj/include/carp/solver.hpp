#pragma once

#include <optional>

#include "carp/model.hpp"
#include "carp/rpp.hpp"

namespace carp {

enum class RppChoice { best, h1, h2 };
enum class PartitionScheme { candidates, dp };

struct SolveOptions {
    RppChoice rpp = RppChoice::best;
    PartitionScheme partition = PartitionScheme::candidates;
};

struct SolveResult {
    Solution solution;
    RppTour tour;                    // the partitioned tour
    std::optional<double> h1_cost;   // set when H1 was built
    std::optional<double> h2_cost;   // set when H2 was built
    RppChoice chosen = RppChoice::h1;
};

// Full pipeline on a normalized instance: build the requested tour(s), pick
// the cheaper one (ties resolve to the tree-based tour), partition it.
SolveResult solve(const MetricInstance& inst, const SolveOptions& opts = {});

}  // namespace carp
