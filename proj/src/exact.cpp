#include "carp/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace carp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// DP over (served subset, last oriented endpoint) for one customer group,
// local indices. States 2c+d with d=0 forward, d=1 reversed.
struct GroupTourDp {
    GroupTourDp(std::span<const int> group, const MetricInstance& inst)
        : group_(group.begin(), group.end()), inst_(inst) {
        const int g = static_cast<int>(group_.size());
        dp.assign(size_t{1} << g, std::vector<double>(2 * g, kInf));
        parent.assign(size_t{1} << g, std::vector<int>(2 * g, -1));
        for (int c = 0; c < g; ++c)
            for (int d = 0; d < 2; ++d)
                dp[size_t{1} << c][2 * c + d] =
                    inst_.dist(kDepot, entry(c, d)) + inst_.customer_cost(group_[c]);
        const size_t full = (size_t{1} << g) - 1;
        for (size_t mask = 1; mask <= full; ++mask)
            for (int last = 0; last < 2 * g; ++last) {
                const double base = dp[mask][last];
                if (base == kInf || !(mask >> (last / 2) & 1)) continue;
                const VertexId from = exit(last / 2, last % 2);
                for (int c = 0; c < g; ++c) {
                    if (mask >> c & 1) continue;
                    for (int d = 0; d < 2; ++d) {
                        const double cand =
                            base + inst_.dist(from, entry(c, d)) + inst_.customer_cost(group_[c]);
                        double& slot = dp[mask | (size_t{1} << c)][2 * c + d];
                        if (cand < slot) {
                            slot = cand;
                            parent[mask | (size_t{1} << c)][2 * c + d] = last;
                        }
                    }
                }
            }
    }

    VertexId entry(int c, int d) const {
        const auto& [s, t] = inst_.customer(group_[c]);
        return d == 0 ? s : t;
    }
    VertexId exit(int c, int d) const {
        const auto& [s, t] = inst_.customer(group_[c]);
        return d == 0 ? t : s;
    }

    Route best_route() const {
        const int g = static_cast<int>(group_.size());
        const size_t full = (size_t{1} << g) - 1;
        int best_last = -1;
        double best = kInf;
        for (int last = 0; last < 2 * g; ++last) {
            if (dp[full][last] == kInf) continue;
            const double total = dp[full][last] + inst_.dist(exit(last / 2, last % 2), kDepot);
            if (total < best) {
                best = total;
                best_last = last;
            }
        }
        std::vector<ServedCustomer> served;
        size_t mask = full;
        int cur = best_last;
        while (cur != -1) {
            served.push_back({group_[cur / 2],
                              cur % 2 == 0 ? Orientation::forward : Orientation::reversed});
            const int prev = parent[mask][cur];
            mask &= ~(size_t{1} << (cur / 2));
            cur = prev;
        }
        std::reverse(served.begin(), served.end());
        return make_route(std::move(served), inst_);
    }

    std::vector<int> group_;
    const MetricInstance& inst_;
    std::vector<std::vector<double>> dp;
    std::vector<std::vector<int>> parent;
};

}  // namespace

Route optimal_group_tour(std::span<const int> group, const MetricInstance& inst, int cap) {
    if (group.empty()) throw InvalidArgumentError("customer group is empty");
    if (static_cast<int>(group.size()) > cap)
        throw SizeCapError("group tour solver is capped at " + std::to_string(cap) +
                           " customers, group has " + std::to_string(group.size()));
    std::set<int> distinct;
    for (int c : group) {
        if (c < 0 || c >= inst.customer_count())
            throw InvalidArgumentError("customer index " + std::to_string(c) + " out of range");
        if (!distinct.insert(c).second)
            throw InvalidArgumentError("customer " + std::to_string(c) + " repeated in group");
    }
    return GroupTourDp(group, inst).best_route();
}

Solution exact_carp(const MetricInstance& inst, int cap) {
    const int m = inst.customer_count();
    if (m > cap)
        throw SizeCapError("exact solver is capped at " + std::to_string(cap) +
                           " customers, instance has " + std::to_string(m));
    if (m == 0) return {};
    const int k = inst.capacity();

    // Group-tour value for every customer subset of size <= k, in one DP.
    std::vector<int> all(m);
    for (int c = 0; c < m; ++c) all[c] = c;
    const GroupTourDp tours(all, inst);
    const size_t full = (size_t{1} << m) - 1;
    std::vector<double> tour_cost(full + 1, kInf);
    for (size_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) > k) continue;
        for (int last = 0; last < 2 * m; ++last) {
            if (tours.dp[mask][last] == kInf) continue;
            tour_cost[mask] = std::min(
                tour_cost[mask],
                tours.dp[mask][last] + inst.dist(tours.exit(last / 2, last % 2), kDepot));
        }
    }

    // Partition DP: every block contains the lowest uncovered customer.
    std::vector<double> best(full + 1, kInf);
    std::vector<size_t> choice(full + 1, 0);
    best[0] = 0.0;
    for (size_t s = 1; s <= full; ++s) {
        const size_t low = s & (~s + 1);
        for (size_t block = s; block; block = (block - 1) & s) {
            if (!(block & low) || tour_cost[block] == kInf) continue;
            const double cand = best[s ^ block] + tour_cost[block];
            if (cand < best[s]) {
                best[s] = cand;
                choice[s] = block;
            }
        }
    }

    std::vector<Route> routes;
    for (size_t s = full; s;) {
        const size_t block = choice[s];
        std::vector<int> group;
        for (int c = 0; c < m; ++c)
            if (block >> c & 1) group.push_back(c);
        routes.push_back(optimal_group_tour(group, inst, cap));
        s ^= block;
    }
    std::reverse(routes.begin(), routes.end());
    return make_solution(std::move(routes));
}

}  // namespace carp
