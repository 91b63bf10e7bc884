#include "carp/partition.hpp"

#include <algorithm>
#include <limits>

#include "carp/analysis.hpp"

namespace carp {

namespace {

// Fragment-cost helper over a fixed rotation of the tour's customer
// sequence. Prefix sums make any contiguous fragment O(1).
class FragmentCosts {
public:
    FragmentCosts(const std::vector<ServedCustomer>& seq, const MetricInstance& inst)
        : seq_(seq), inst_(inst), inner_prefix_(seq.size() + 1, 0.0) {
        for (size_t j = 0; j < seq_.size(); ++j) {
            double step = inst_.customer_cost(seq_[j].customer);
            if (j + 1 < seq_.size()) step += inst_.dist(inst_.exit(seq_[j]), inst_.entry(seq_[j + 1]));
            inner_prefix_[j + 1] = inner_prefix_[j] + step;
        }
    }

    // Closed route cost of the fragment [a, b).
    double route(size_t a, size_t b) const {
        const double inner = inner_prefix_[b] - inner_prefix_[a] -
                             (b < seq_.size() ? inst_.dist(inst_.exit(seq_[b - 1]),
                                                           inst_.entry(seq_[b]))
                                              : 0.0);
        return inst_.dist(kDepot, inst_.entry(seq_[a])) + inner +
               inst_.dist(inst_.exit(seq_[b - 1]), kDepot);
    }

private:
    const std::vector<ServedCustomer>& seq_;
    const MetricInstance& inst_;
    std::vector<double> inner_prefix_;  // includes the connector after each customer
};

Solution routes_from_fragments(const std::vector<ServedCustomer>& seq,
                               const std::vector<std::pair<size_t, size_t>>& fragments,
                               const MetricInstance& inst) {
    std::vector<Route> routes;
    routes.reserve(fragments.size());
    for (const auto& [a, b] : fragments) {
        if (a == b) continue;
        routes.push_back(
            make_route(std::vector<ServedCustomer>(seq.begin() + a, seq.begin() + b), inst));
    }
    return make_solution(std::move(routes));
}

}  // namespace

Solution jitp_candidates(const RppTour& tour, const MetricInstance& inst) {
    const int m = static_cast<int>(tour.order.size());
    const int k = inst.capacity();
    if (m == 0) return {};

    const FragmentCosts costs(tour.order, inst);
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<std::pair<size_t, size_t>> best_fragments;

    // Offset i: first fragment serves i customers, the rest full k-blocks.
    // Ties keep the smallest offset.
    for (int i = 1; i <= std::min(k, m); ++i) {
        std::vector<std::pair<size_t, size_t>> fragments;
        double total = 0.0;
        size_t at = 0;
        size_t take = static_cast<size_t>(i);
        while (at < static_cast<size_t>(m)) {
            const size_t end = std::min(static_cast<size_t>(m), at + take);
            fragments.emplace_back(at, end);
            total += costs.route(at, end);
            at = end;
            take = static_cast<size_t>(k);
        }
        if (total < best_cost) {
            best_cost = total;
            best_fragments = std::move(fragments);
        }
    }
    return routes_from_fragments(tour.order, best_fragments, inst);
}

Solution jitp_dp(const RppTour& tour, const MetricInstance& inst) {
    const int m = static_cast<int>(tour.order.size());
    const int k = inst.capacity();
    if (m == 0) return {};

    const double inf = std::numeric_limits<double>::infinity();
    double best_total = inf;
    std::vector<ServedCustomer> best_seq;
    std::vector<std::pair<size_t, size_t>> best_fragments;

    // Some fragment boundary falls within k positions before the tour's
    // first customer, so these rotations cover every cyclic partition.
    for (int offset = 0; offset < std::min(k, m); ++offset) {
        std::vector<ServedCustomer> seq(m);
        const int start = (m - offset) % m;
        for (int j = 0; j < m; ++j) seq[j] = tour.order[(start + j) % m];

        const FragmentCosts costs(seq, inst);
        std::vector<double> dp(m + 1, inf);
        std::vector<int> prev(m + 1, -1);
        dp[0] = 0.0;
        for (int j = 1; j <= m; ++j)
            for (int b = 1; b <= std::min(k, j); ++b) {
                const double cand = dp[j - b] + costs.route(j - b, j);
                if (cand < dp[j]) {
                    dp[j] = cand;
                    prev[j] = j - b;
                }
            }
        if (dp[m] < best_total) {
            best_total = dp[m];
            std::vector<std::pair<size_t, size_t>> fragments;
            for (int j = m; j > 0; j = prev[j]) fragments.emplace_back(prev[j], j);
            std::reverse(fragments.begin(), fragments.end());
            best_seq = std::move(seq);
            best_fragments = std::move(fragments);
        }
    }
    return routes_from_fragments(best_seq, best_fragments, inst);
}

JitpBound jitp_bound_report(const Solution& sol, const RppTour& tour, const MetricInstance& inst) {
    JitpBound out;
    const double k = inst.capacity();
    out.delta_all = delta_all(inst);
    out.tour_cost = tour.cost;
    out.lhs = sol.total_cost;
    out.rhs = (2.0 / k) * out.delta_all + ((k - 1.0) / k) * tour.cost;
    out.holds = approx_leq(out.lhs, out.rhs);
    return out;
}

}  // namespace carp
