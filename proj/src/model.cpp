#include "carp/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace carp {

bool approx_leq(double lhs, double rhs, double rel) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return lhs <= rhs + rel * scale;
}

bool approx_eq(double a, double b, double rel) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel * scale;
}

std::vector<int> RawInstance::customer_edge_indices() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].demand == 1) out.push_back(i);
    return out;
}

void RawInstance::validate() const {
    if (vertex_count <= 0)
        throw InvalidArgumentError("instance must have at least one vertex");
    if (depot < 0 || depot >= vertex_count)
        throw InvalidArgumentError("depot id out of range");
    if (capacity < 1) throw InvalidArgumentError("capacity must be >= 1");
    for (size_t i = 0; i < edges.size(); ++i) {
        const RawEdge& e = edges[i];
        std::ostringstream at;
        at << "edge " << i << " (" << e.u << "," << e.v << ")";
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw InvalidArgumentError(at.str() + ": vertex id out of range");
        if (!(e.cost >= 0.0)) throw InvalidArgumentError(at.str() + ": cost must be nonnegative");
        if (e.demand != 0 && e.demand != 1)
            throw InvalidArgumentError(at.str() + ": demand must be 0 or 1 (equal-demand scope)");
        if (e.demand == 1 && e.u == e.v)
            throw InvalidArgumentError(at.str() + ": self-loop cannot carry demand");
    }
}

MetricInstance::MetricInstance(std::vector<std::pair<VertexId, VertexId>> customers,
                               std::vector<double> dist_matrix, int capacity)
    : m_(static_cast<int>(customers.size())),
      capacity_(capacity),
      customers_(std::move(customers)),
      dist_(std::move(dist_matrix)) {
    const size_t n = static_cast<size_t>(2 * m_ + 1);
    if (dist_.size() != n * n)
        throw InvalidArgumentError("distance matrix size does not match 2m+1 vertices");
    if (capacity_ < 1) throw InvalidArgumentError("capacity must be >= 1");
}

void MetricInstance::set_capacity(int k) {
    if (k < 1) throw InvalidArgumentError("capacity must be >= 1");
    capacity_ = k;
}

std::vector<std::string> MetricInstance::validate() const {
    std::vector<std::string> out;
    const int n = vertex_count();
    double max_entry = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) max_entry = std::max(max_entry, dist(a, b));
    const double tol = 1e-9 * std::max(1.0, max_entry);
    for (int a = 0; a < n; ++a) {
        if (dist(a, a) != 0.0) out.push_back("nonzero diagonal at vertex " + std::to_string(a));
        for (int b = a + 1; b < n; ++b) {
            if (dist(a, b) != dist(b, a))
                out.push_back("asymmetry between " + std::to_string(a) + " and " + std::to_string(b));
            if (dist(a, b) < 0.0)
                out.push_back("negative distance between " + std::to_string(a) + " and " +
                              std::to_string(b));
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int h = 0; h < n; ++h)
                if (dist(a, h) > dist(a, b) + dist(b, h) + tol) {
                    std::ostringstream os;
                    os << "triangle violation: d(" << a << "," << h << ") > d(" << a << "," << b
                       << ") + d(" << b << "," << h << ")";
                    out.push_back(os.str());
                }
    std::vector<int> owner(n, -1);
    for (int i = 0; i < m_; ++i) {
        for (VertexId v : {customers_[i].first, customers_[i].second}) {
            if (v <= 0 || v >= n) {
                out.push_back("customer " + std::to_string(i) + " endpoint out of range");
                continue;
            }
            if (owner[v] != -1)
                out.push_back("vertex " + std::to_string(v) + " belongs to customers " +
                              std::to_string(owner[v]) + " and " + std::to_string(i));
            owner[v] = i;
        }
        if (customers_[i].first == customers_[i].second)
            out.push_back("customer " + std::to_string(i) + " is a self-loop");
    }
    for (int v = 1; v < n; ++v)
        if (owner[v] == -1) out.push_back("vertex " + std::to_string(v) + " belongs to no customer");
    return out;
}

double walk_cost(std::span<const ServedCustomer> order, const MetricInstance& inst) {
    if (order.empty()) return 0.0;
    for (const ServedCustomer& sc : order)
        if (sc.customer < 0 || sc.customer >= inst.customer_count())
            throw InvalidArgumentError("customer index " + std::to_string(sc.customer) +
                                       " out of range");
    double total = inst.dist(kDepot, inst.entry(order.front()));
    for (size_t i = 0; i < order.size(); ++i) {
        total += inst.customer_cost(order[i].customer);
        if (i + 1 < order.size()) total += inst.dist(inst.exit(order[i]), inst.entry(order[i + 1]));
    }
    total += inst.dist(inst.exit(order.back()), kDepot);
    return total;
}

double route_cost(const Route& route, const MetricInstance& inst) {
    if (route.served.empty()) throw InvalidArgumentError("route serves no customer");
    return walk_cost(route.served, inst);
}

Route make_route(std::vector<ServedCustomer> served, const MetricInstance& inst) {
    Route r;
    r.served = std::move(served);
    r.cost = route_cost(r, inst);
    return r;
}

RppTour make_tour(std::vector<ServedCustomer> order, const MetricInstance& inst) {
    RppTour t;
    t.order = std::move(order);
    t.cost = walk_cost(t.order, inst);
    return t;
}

Solution make_solution(std::vector<Route> routes) {
    Solution s;
    s.routes = std::move(routes);
    for (const Route& r : s.routes) s.total_cost += r.cost;
    return s;
}

FeasibilityReport check_solution(const Solution& sol, const MetricInstance& inst) {
    FeasibilityReport rep;
    std::vector<int> served_count(inst.customer_count(), 0);
    double recomputed_total = 0.0;
    for (int ri = 0; ri < static_cast<int>(sol.routes.size()); ++ri) {
        const Route& r = sol.routes[ri];
        if (r.served.empty()) {
            rep.empty_routes.push_back(ri);
            rep.violations.push_back("route " + std::to_string(ri) + " serves no customer");
            continue;
        }
        if (static_cast<int>(r.served.size()) > inst.capacity()) {
            rep.oversized_routes.push_back(ri);
            rep.violations.push_back("route " + std::to_string(ri) + " serves " +
                                     std::to_string(r.served.size()) + " customers, capacity is " +
                                     std::to_string(inst.capacity()));
        }
        bool valid_indices = true;
        for (const ServedCustomer& sc : r.served) {
            if (sc.customer < 0 || sc.customer >= inst.customer_count()) {
                rep.violations.push_back("route " + std::to_string(ri) + " serves unknown customer " +
                                         std::to_string(sc.customer));
                valid_indices = false;
            } else {
                ++served_count[sc.customer];
            }
        }
        if (!valid_indices) continue;
        const double actual = route_cost(r, inst);
        recomputed_total += actual;
        if (!approx_eq(actual, r.cost)) {
            rep.cost_mismatches.push_back(ri);
            rep.violations.push_back("route " + std::to_string(ri) + " stores cost " +
                                     std::to_string(r.cost) + ", recomputed " +
                                     std::to_string(actual));
        }
    }
    for (int c = 0; c < inst.customer_count(); ++c) {
        if (served_count[c] == 0) rep.uncovered.push_back(c);
        if (served_count[c] > 1) rep.served_multiple.push_back(c);
    }
    if (!rep.uncovered.empty()) {
        std::ostringstream os;
        os << "uncovered: {";
        for (size_t i = 0; i < rep.uncovered.size(); ++i)
            os << (i ? "," : "") << rep.uncovered[i];
        os << "}";
        rep.violations.push_back(os.str());
    }
    if (!rep.served_multiple.empty()) {
        std::ostringstream os;
        os << "served more than once: {";
        for (size_t i = 0; i < rep.served_multiple.size(); ++i)
            os << (i ? "," : "") << rep.served_multiple[i];
        os << "}";
        rep.violations.push_back(os.str());
    }
    if (!approx_eq(recomputed_total, sol.total_cost)) {
        rep.total_cost_mismatch = true;
        rep.violations.push_back("total cost " + std::to_string(sol.total_cost) +
                                 " does not match route sum " + std::to_string(recomputed_total));
    }
    return rep;
}

}  // namespace carp
