#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carp/error.hpp"

namespace carp {

using VertexId = int;

// Depot id in every normalized (metric) instance.
inline constexpr VertexId kDepot = 0;

struct RawEdge {
    VertexId u = 0;
    VertexId v = 0;
    double cost = 0.0;
    int demand = 0;
};

// User-supplied instance: an arbitrary connected graph with edge costs,
// 0/1 edge demands, a depot and a vehicle capacity. Not necessarily metric.
struct RawInstance {
    int vertex_count = 0;
    std::vector<RawEdge> edges;
    VertexId depot = 0;
    int capacity = 1;

    std::vector<int> customer_edge_indices() const;

    // Throws InvalidArgumentError on structural violations (bad ids, negative
    // costs, demand outside {0,1}, demand-carrying self loops, capacity < 1).
    void validate() const;
};

enum class Orientation : std::uint8_t { forward, reversed };

inline Orientation flip(Orientation o) {
    return o == Orientation::forward ? Orientation::reversed : Orientation::forward;
}

struct ServedCustomer {
    int customer = 0;
    Orientation dir = Orientation::forward;

    friend bool operator==(const ServedCustomer&, const ServedCustomer&) = default;
};

// Normalized instance: depot 0 plus 2m customer endpoints, a symmetric
// metric over them, and m vertex-disjoint unit-demand customer edges.
class MetricInstance {
public:
    MetricInstance() = default;
    MetricInstance(std::vector<std::pair<VertexId, VertexId>> customers,
                   std::vector<double> dist_matrix, int capacity);

    int customer_count() const { return m_; }
    int vertex_count() const { return 2 * m_ + 1; }
    int capacity() const { return capacity_; }
    void set_capacity(int k);

    double dist(VertexId a, VertexId b) const { return dist_[a * (2 * m_ + 1) + b]; }
    const std::pair<VertexId, VertexId>& customer(int i) const { return customers_[i]; }
    double customer_cost(int i) const { return dist(customers_[i].first, customers_[i].second); }

    // Endpoint the vehicle arrives at / leaves from when serving `sc`.
    VertexId entry(ServedCustomer sc) const {
        const auto& [s, t] = customers_[sc.customer];
        return sc.dir == Orientation::forward ? s : t;
    }
    VertexId exit(ServedCustomer sc) const {
        const auto& [s, t] = customers_[sc.customer];
        return sc.dir == Orientation::forward ? t : s;
    }

    // Returns human-readable invariant violations (empty when well formed):
    // symmetry, zero diagonal, triangle inequality within 1e-9 * max entry,
    // and vertex-disjoint customer pairs covering every non-depot vertex.
    std::vector<std::string> validate() const;

private:
    int m_ = 0;
    int capacity_ = 1;
    std::vector<std::pair<VertexId, VertexId>> customers_;
    std::vector<double> dist_;
};

// Closed walk through the depot serving every customer exactly once, in
// alternating customer/connector structure.
struct RppTour {
    std::vector<ServedCustomer> order;
    double cost = 0.0;
};

struct Route {
    std::vector<ServedCustomer> served;
    double cost = 0.0;
};

struct Solution {
    std::vector<Route> routes;
    double total_cost = 0.0;
};

// Cost of the closed walk v0, e1, ..., v0 induced by an ordered customer
// sequence. Throws InvalidArgumentError on out-of-range customer indices.
double walk_cost(std::span<const ServedCustomer> order, const MetricInstance& inst);

// Recomputes the route's closed-walk cost; rejects empty routes.
double route_cost(const Route& route, const MetricInstance& inst);

Route make_route(std::vector<ServedCustomer> served, const MetricInstance& inst);
RppTour make_tour(std::vector<ServedCustomer> order, const MetricInstance& inst);
Solution make_solution(std::vector<Route> routes);

struct FeasibilityReport {
    std::vector<int> uncovered;
    std::vector<int> served_multiple;
    std::vector<int> oversized_routes;
    std::vector<int> empty_routes;
    std::vector<int> cost_mismatches;
    bool total_cost_mismatch = false;
    std::vector<std::string> violations;

    bool feasible() const { return violations.empty(); }
};

// Reports violations of partition coverage, capacity and cost consistency
// (recomputed vs stored, 1e-9 relative). Empty report iff feasible.
FeasibilityReport check_solution(const Solution& sol, const MetricInstance& inst);

// lhs <= rhs up to a 1e-9 relative slack (with an absolute floor of 1e-9).
bool approx_leq(double lhs, double rhs, double rel = 1e-9);
bool approx_eq(double a, double b, double rel = 1e-9);

}  // namespace carp
