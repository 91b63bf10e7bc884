#pragma once

#include "carp/model.hpp"

namespace carp {

// An RPP tour together with the ingredients of its construction; the part
// costs feed the analysis checks.
struct TourBuild {
    RppTour tour;
    double walk_cost = 0.0;       // Eulerian walk cost before shortcutting
    double tree_cost = 0.0;       // spanning-structure cost (H1 only)
    double matching_cost = 0.0;   // perfect-matching cost
    double connector_cost = 0.0;  // component-connector cost c(F) (H2 only)
};

// Tour via constrained spanning tree + odd-vertex matching + Euler + shortcut.
TourBuild build_h1(const MetricInstance& inst);

// Tour via endpoint matching + greedy component connection with doubled
// connectors + Euler + shortcut.
TourBuild build_h2(const MetricInstance& inst);

// Optimal tour by DP over (customer subset, last oriented endpoint).
// Throws SizeCapError when the customer count exceeds `cap`.
RppTour exact_rpp(const MetricInstance& inst, int cap = 10);

inline constexpr int kExactRppCap = 10;

}  // namespace carp
