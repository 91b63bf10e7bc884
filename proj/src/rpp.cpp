#include "carp/rpp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "carp/graphkit.hpp"
#include "carp/matching.hpp"

namespace carp {

namespace {

// Canonical direction: the cheaper-index customer leads; a single-customer
// tour is served forward. Costs are unchanged under reversal (symmetric
// metric) but are recomputed to keep the stored value consistent.
RppTour normalize_direction(RppTour tour, const MetricInstance& inst) {
    if (tour.order.size() > 1 && tour.order.back().customer < tour.order.front().customer) {
        std::reverse(tour.order.begin(), tour.order.end());
        for (ServedCustomer& sc : tour.order) sc.dir = flip(sc.dir);
    } else if (tour.order.size() == 1 && tour.order.front().dir == Orientation::reversed) {
        tour.order.front().dir = Orientation::forward;
    }
    return make_tour(std::move(tour.order), inst);
}

std::vector<EdgePair> customer_edges(const MetricInstance& inst) {
    std::vector<EdgePair> out;
    out.reserve(inst.customer_count());
    for (int i = 0; i < inst.customer_count(); ++i)
        out.push_back(ordered_pair(inst.customer(i).first, inst.customer(i).second));
    return out;
}

}  // namespace

TourBuild build_h1(const MetricInstance& inst) {
    TourBuild out;
    const int m = inst.customer_count();
    if (m == 0) return out;
    const DistanceFn dist = [&inst](VertexId a, VertexId b) { return inst.dist(a, b); };

    std::vector<VertexId> all(inst.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    const std::vector<EdgePair> required = customer_edges(inst);
    const std::vector<EdgePair> tree = constrained_mst(all, required, dist);

    MultiEdgeSet graph;
    std::vector<int> degree(inst.vertex_count(), 0);
    for (const EdgePair& e : tree) {
        graph.add(e.first, e.second);
        out.tree_cost += inst.dist(e.first, e.second);
        ++degree[e.first];
        ++degree[e.second];
    }
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < inst.vertex_count(); ++v)
        if (degree[v] % 2 != 0) odd.push_back(v);
    if (!odd.empty()) {
        const Matching matched = min_cost_perfect_matching(odd, dist);
        out.matching_cost = matched.cost;
        for (const auto& [a, b] : matched.pairs) graph.add(a, b);
    }

    const std::vector<VertexId> walk = euler_tour(graph, kDepot);
    out.walk_cost = graph.total_cost(dist);
    out.tour = normalize_direction(shortcut_to_rpp(walk, inst), inst);
    return out;
}

TourBuild build_h2(const MetricInstance& inst) {
    TourBuild out;
    const int m = inst.customer_count();
    if (m == 0) return out;
    const DistanceFn dist = [&inst](VertexId a, VertexId b) { return inst.dist(a, b); };

    std::vector<VertexId> endpoints(2 * m);
    std::iota(endpoints.begin(), endpoints.end(), 1);
    const Matching matched = min_cost_perfect_matching(endpoints, dist);
    out.matching_cost = matched.cost;

    MultiEdgeSet even_graph;
    for (const EdgePair& e : customer_edges(inst)) even_graph.add(e.first, e.second);
    for (const auto& [a, b] : matched.pairs) even_graph.add(a, b);

    std::vector<VertexId> all(inst.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    const std::vector<std::vector<VertexId>> comps = components_of(all, even_graph);
    const std::vector<EdgePair> connectors = connect_components(comps, dist);

    MultiEdgeSet eulerian = even_graph;
    for (const EdgePair& e : connectors) {
        eulerian.add(e.first, e.second, 2);
        out.connector_cost += inst.dist(e.first, e.second);
    }

    const std::vector<VertexId> walk = euler_tour(eulerian, kDepot);
    out.walk_cost = eulerian.total_cost(dist);
    out.tour = normalize_direction(shortcut_to_rpp(walk, inst), inst);
    return out;
}

RppTour exact_rpp(const MetricInstance& inst, int cap) {
    const int m = inst.customer_count();
    if (m == 0) return RppTour{};
    if (m > cap)
        throw SizeCapError("exact tour solver is capped at " + std::to_string(cap) +
                           " customers, instance has " + std::to_string(m));

    const int states = 2 * m;  // possible last exit endpoints, as (customer, dir)
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(size_t{1} << m, std::vector<double>(states, inf));
    std::vector<std::vector<int>> parent(size_t{1} << m, std::vector<int>(states, -1));

    auto entry_of = [&](int c, int d) {
        return d == 0 ? inst.customer(c).first : inst.customer(c).second;
    };
    auto exit_of = [&](int c, int d) {
        return d == 0 ? inst.customer(c).second : inst.customer(c).first;
    };

    for (int c = 0; c < m; ++c)
        for (int d = 0; d < 2; ++d)
            dp[size_t{1} << c][2 * c + d] = inst.dist(kDepot, entry_of(c, d)) + inst.customer_cost(c);

    const size_t full = (size_t{1} << m) - 1;
    for (size_t mask = 1; mask <= full; ++mask) {
        for (int last = 0; last < states; ++last) {
            const double base = dp[mask][last];
            if (base == inf) continue;
            if (!(mask >> (last / 2) & 1)) continue;
            const VertexId from = exit_of(last / 2, last % 2);
            for (int c = 0; c < m; ++c) {
                if (mask >> c & 1) continue;
                for (int d = 0; d < 2; ++d) {
                    const double cand =
                        base + inst.dist(from, entry_of(c, d)) + inst.customer_cost(c);
                    double& slot = dp[mask | (size_t{1} << c)][2 * c + d];
                    if (cand < slot) {
                        slot = cand;
                        parent[mask | (size_t{1} << c)][2 * c + d] = last;
                    }
                }
            }
        }
    }

    int best_last = -1;
    double best = inf;
    for (int last = 0; last < states; ++last) {
        if (dp[full][last] == inf) continue;
        const double total = dp[full][last] + inst.dist(exit_of(last / 2, last % 2), kDepot);
        if (total < best) {
            best = total;
            best_last = last;
        }
    }

    std::vector<ServedCustomer> order;
    size_t mask = full;
    int cur = best_last;
    while (cur != -1) {
        order.push_back({cur / 2, cur % 2 == 0 ? Orientation::forward : Orientation::reversed});
        const int prev = parent[mask][cur];
        mask &= ~(size_t{1} << (cur / 2));
        cur = prev;
    }
    std::reverse(order.begin(), order.end());
    return normalize_direction(make_tour(std::move(order), inst), inst);
}

}  // namespace carp
