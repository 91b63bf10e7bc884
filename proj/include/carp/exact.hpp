#pragma once

#include <span>

#include "carp/model.hpp"

namespace carp {

inline constexpr int kGroupTourCap = 10;
inline constexpr int kExactCarpCap = 8;

// Minimum-cost route serving exactly the given customers, by DP over
// (subset, last oriented endpoint). Throws SizeCapError beyond `cap`.
Route optimal_group_tour(std::span<const int> group, const MetricInstance& inst,
                         int cap = kGroupTourCap);

// Exact optimum via subset-partition DP over groups of size <= capacity;
// routes are realized from back-pointers. Throws SizeCapError beyond `cap`.
Solution exact_carp(const MetricInstance& inst, int cap = kExactCarpCap);

}  // namespace carp
