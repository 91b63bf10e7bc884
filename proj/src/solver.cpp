#include "carp/solver.hpp"

#include "carp/partition.hpp"

namespace carp {

SolveResult solve(const MetricInstance& inst, const SolveOptions& opts) {
    SolveResult out;
    if (inst.customer_count() == 0) {
        out.chosen = opts.rpp == RppChoice::h2 ? RppChoice::h2 : RppChoice::h1;
        return out;
    }
    if (opts.rpp == RppChoice::best || opts.rpp == RppChoice::h1) {
        const TourBuild h1 = build_h1(inst);
        out.h1_cost = h1.tour.cost;
        out.tour = h1.tour;
        out.chosen = RppChoice::h1;
    }
    if (opts.rpp == RppChoice::best || opts.rpp == RppChoice::h2) {
        const TourBuild h2 = build_h2(inst);
        out.h2_cost = h2.tour.cost;
        // Ties resolve to the tree-based tour.
        if (opts.rpp == RppChoice::h2 || !out.h1_cost || h2.tour.cost < *out.h1_cost) {
            out.tour = h2.tour;
            out.chosen = RppChoice::h2;
        }
    }
    out.solution = opts.partition == PartitionScheme::candidates ? jitp_candidates(out.tour, inst)
                                                                 : jitp_dp(out.tour, inst);
    return out;
}

}  // namespace carp
