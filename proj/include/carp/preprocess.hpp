#pragma once

#include <utility>
#include <vector>

#include "carp/model.hpp"

namespace carp {

// All-pairs shortest-path closure of a raw instance, with canonical path
// reconstruction. Distances are exact for integer edge costs.
class MetricClosure {
public:
    MetricClosure() = default;
    MetricClosure(int n, std::vector<double> dist, std::vector<int> hops, std::vector<int> next);

    int size() const { return n_; }
    double dist(VertexId a, VertexId b) const { return dist_[a * n_ + b]; }
    bool reachable(VertexId a, VertexId b) const;

    // Canonical shortest path a -> b (inclusive endpoints). The canonical
    // choice takes, at every step, the smallest-id next vertex among the
    // minimum-cost minimum-hop continuations.
    std::vector<VertexId> path(VertexId a, VertexId b) const;

private:
    int n_ = 0;
    std::vector<double> dist_;
    std::vector<int> hops_;
    std::vector<int> next_;
};

// Cubic DP closure over the raw graph. Throws InfeasibleError if some
// customer endpoint is unreachable from the depot.
MetricClosure metric_closure(const RawInstance& raw);

// Mapping from the normalized metric instance back to the raw graph.
class LiftMap {
public:
    LiftMap() = default;
    LiftMap(RawInstance raw, MetricClosure closure, std::vector<VertexId> origin,
            std::vector<int> customer_edges);

    const RawInstance& raw() const { return raw_; }
    const MetricClosure& closure() const { return closure_; }
    VertexId origin(VertexId metric_vertex) const { return origin_[metric_vertex]; }
    // Index into raw().edges of the original edge of a metric customer.
    int customer_raw_edge(int customer) const { return customer_edges_[customer]; }

private:
    RawInstance raw_;
    MetricClosure closure_;
    std::vector<VertexId> origin_;
    std::vector<int> customer_edges_;
};

// Converts a raw instance into the normalized metric form: depot plus 2m
// duplicated customer endpoints at closure distances. Copies of a shared raw
// vertex sit at distance 0 from each other. m = 0 yields an empty instance.
std::pair<MetricInstance, LiftMap> normalize(const RawInstance& raw);

struct LiftedRoute {
    std::vector<VertexId> walk;  // closed raw walk, starts/ends at the raw depot
    double cost = 0.0;
};

struct LiftedSolution {
    std::vector<LiftedRoute> routes;
    double total_cost = 0.0;
};

// Expands every metric connector to its stored shortest raw path and every
// customer to its original raw edge.
LiftedSolution lift_solution(const Solution& sol, const LiftMap& lift);

}  // namespace carp
