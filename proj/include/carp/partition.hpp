#pragma once

#include "carp/model.hpp"

namespace carp {

// Best of k cyclic offset partitions of the tour into fragments of at most k
// customers, each fragment closed through the depot. Fragments preserve the
// tour's customer order and orientations.
Solution jitp_candidates(const RppTour& tour, const MetricInstance& inst);

// Optimal contiguous cyclic partition into fragments of at most k customers;
// never costlier than jitp_candidates.
Solution jitp_dp(const RppTour& tour, const MetricInstance& inst);

struct JitpBound {
    double lhs = 0.0;       // partition cost
    double rhs = 0.0;       // (2/k) * delta(E*) + ((k-1)/k) * c(tour)
    double delta_all = 0.0;
    double tour_cost = 0.0;
    bool holds = false;
};

JitpBound jitp_bound_report(const Solution& sol, const RppTour& tour, const MetricInstance& inst);

}  // namespace carp
