#include "carp/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace carp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kNoHop = std::numeric_limits<int>::max() / 4;

}  // namespace

MetricClosure::MetricClosure(int n, std::vector<double> dist, std::vector<int> hops,
                             std::vector<int> next)
    : n_(n), dist_(std::move(dist)), hops_(std::move(hops)), next_(std::move(next)) {}

bool MetricClosure::reachable(VertexId a, VertexId b) const {
    return dist_[a * n_ + b] < kInf;
}

std::vector<VertexId> MetricClosure::path(VertexId a, VertexId b) const {
    std::vector<VertexId> out{a};
    VertexId cur = a;
    while (cur != b) {
        cur = next_[cur * n_ + b];
        out.push_back(cur);
    }
    return out;
}

MetricClosure metric_closure(const RawInstance& raw) {
    raw.validate();
    const int n = raw.vertex_count;
    std::vector<double> dist(static_cast<size_t>(n) * n, kInf);
    std::vector<int> hops(static_cast<size_t>(n) * n, kNoHop);
    for (int v = 0; v < n; ++v) {
        dist[v * n + v] = 0.0;
        hops[v * n + v] = 0;
    }
    for (const RawEdge& e : raw.edges) {
        if (e.u == e.v) continue;
        double& d = dist[e.u * n + e.v];
        int& h = hops[e.u * n + e.v];
        if (e.cost < d || (e.cost == d && h > 1)) {
            d = e.cost;
            h = 1;
            dist[e.v * n + e.u] = e.cost;
            hops[e.v * n + e.u] = 1;
        }
    }
    // Floyd-Warshall on (cost, hops); hops break cost ties so that canonical
    // paths always terminate, zero-cost edges included.
    for (int w = 0; w < n; ++w)
        for (int i = 0; i < n; ++i) {
            const double diw = dist[i * n + w];
            if (diw == kInf) continue;
            const int hiw = hops[i * n + w];
            for (int j = 0; j < n; ++j) {
                const double dwj = dist[w * n + j];
                if (dwj == kInf) continue;
                const double cand = diw + dwj;
                const int cand_h = hiw + hops[w * n + j];
                double& d = dist[i * n + j];
                int& h = hops[i * n + j];
                if (cand < d || (cand == d && cand_h < h)) {
                    d = cand;
                    h = cand_h;
                }
            }
        }

    for (int idx : raw.customer_edge_indices()) {
        const RawEdge& e = raw.edges[idx];
        if (dist[raw.depot * n + e.u] == kInf || dist[raw.depot * n + e.v] == kInf)
            throw InfeasibleError("customer edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") is unreachable from the depot");
    }

    // Cheapest direct edge between each vertex pair, for first-step choices.
    std::vector<double> direct(static_cast<size_t>(n) * n, kInf);
    for (const RawEdge& e : raw.edges) {
        if (e.u == e.v) continue;
        direct[e.u * n + e.v] = std::min(direct[e.u * n + e.v], e.cost);
        direct[e.v * n + e.u] = std::min(direct[e.v * n + e.u], e.cost);
    }

    // next[i][j]: smallest-id neighbor starting a minimum-cost minimum-hop
    // path. Exact equalities hold for integer costs; the tolerant branch
    // keeps decimal-cost inputs working.
    std::vector<int> next(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || dist[i * n + j] == kInf) continue;
            const double dij = dist[i * n + j];
            const int hij = hops[i * n + j];
            int pick = -1;
            for (int w = 0; w < n && pick == -1; ++w) {
                if (w == i || direct[i * n + w] == kInf) continue;
                if (hops[w * n + j] + 1 == hij && direct[i * n + w] + dist[w * n + j] == dij)
                    pick = w;
            }
            if (pick == -1) {
                const double tol = 1e-9 * std::max(1.0, dij);
                double best = kInf;
                for (int w = 0; w < n; ++w) {
                    if (w == i || direct[i * n + w] == kInf) continue;
                    if (hops[w * n + j] + 1 > hij) continue;
                    const double through = direct[i * n + w] + dist[w * n + j];
                    if (through <= dij + tol && through < best) {
                        best = through;
                        pick = w;
                    }
                }
            }
            next[i * n + j] = pick;
        }
    return MetricClosure(n, std::move(dist), std::move(hops), std::move(next));
}

LiftMap::LiftMap(RawInstance raw, MetricClosure closure, std::vector<VertexId> origin,
                 std::vector<int> customer_edges)
    : raw_(std::move(raw)),
      closure_(std::move(closure)),
      origin_(std::move(origin)),
      customer_edges_(std::move(customer_edges)) {}

std::pair<MetricInstance, LiftMap> normalize(const RawInstance& raw) {
    MetricClosure closure = metric_closure(raw);
    const std::vector<int> customer_edges = raw.customer_edge_indices();
    const int m = static_cast<int>(customer_edges.size());

    // Metric vertex i > 0 is a copy of a raw customer endpoint; copies of a
    // shared raw vertex inherit its distances, so they sit at distance 0.
    std::vector<VertexId> origin(2 * m + 1);
    origin[kDepot] = raw.depot;
    std::vector<std::pair<VertexId, VertexId>> customers(m);
    for (int i = 0; i < m; ++i) {
        const RawEdge& e = raw.edges[customer_edges[i]];
        origin[2 * i + 1] = e.u;
        origin[2 * i + 2] = e.v;
        customers[i] = {2 * i + 1, 2 * i + 2};
    }

    const int nm = 2 * m + 1;
    std::vector<double> dist(static_cast<size_t>(nm) * nm, 0.0);
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b) dist[a * nm + b] = closure.dist(origin[a], origin[b]);

    MetricInstance metric(std::move(customers), std::move(dist), raw.capacity);
    LiftMap lift(raw, std::move(closure), std::move(origin), customer_edges);
    return {std::move(metric), std::move(lift)};
}

LiftedSolution lift_solution(const Solution& sol, const LiftMap& lift) {
    LiftedSolution out;
    const RawInstance& raw = lift.raw();
    const MetricClosure& closure = lift.closure();

    auto append_path = [&](std::vector<VertexId>& walk, VertexId from, VertexId to) {
        const std::vector<VertexId> path = closure.path(from, to);
        for (size_t i = 1; i < path.size(); ++i) walk.push_back(path[i]);
    };

    for (const Route& route : sol.routes) {
        LiftedRoute lr;
        lr.walk.push_back(raw.depot);
        VertexId at = raw.depot;
        for (const ServedCustomer& sc : route.served) {
            const RawEdge& edge = raw.edges[lift.customer_raw_edge(sc.customer)];
            const VertexId enter = sc.dir == Orientation::forward ? edge.u : edge.v;
            const VertexId leave = sc.dir == Orientation::forward ? edge.v : edge.u;
            lr.cost += closure.dist(at, enter);
            append_path(lr.walk, at, enter);
            lr.cost += edge.cost;  // the served edge itself is traversed
            lr.walk.push_back(leave);
            at = leave;
        }
        lr.cost += closure.dist(at, raw.depot);
        append_path(lr.walk, at, raw.depot);
        out.total_cost += lr.cost;
        out.routes.push_back(std::move(lr));
    }
    return out;
}

}  // namespace carp
