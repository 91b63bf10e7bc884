#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "carp/model.hpp"

namespace carp {

using DistanceFn = std::function<double(VertexId, VertexId)>;

struct Matching {
    std::vector<std::pair<VertexId, VertexId>> pairs;  // each pair (a,b) with a < b, sorted
    double cost = 0.0;
};

// Exact minimum-cost perfect matching on an even-size vertex set under a
// symmetric distance oracle (blossom primal-dual, O(n^3) class). Equal-cost
// ties resolve to the lexicographically smallest pair list. Throws
// InvalidArgumentError for odd |vertices|.
Matching min_cost_perfect_matching(std::span<const VertexId> vertices, const DistanceFn& dist);

// Exhaustive-recursion optimum, capped at 12 vertices. Same tie-breaking.
Matching matching_oracle(std::span<const VertexId> vertices, const DistanceFn& dist);

}  // namespace carp
