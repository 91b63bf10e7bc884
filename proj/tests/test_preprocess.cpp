#include <random>

#include "doctest.h"
#include "carp/io.hpp"
#include "carp/preprocess.hpp"
#include "oracles.hpp"

using namespace carp;

namespace {

RawInstance path_graph_abc() {
    RawInstance raw;
    raw.vertex_count = 3;
    raw.depot = 0;
    raw.capacity = 1;
    raw.edges = {{0, 1, 1.0, 0}, {1, 2, 1.0, 1}};
    return raw;
}

}  // namespace

TEST_CASE("closure of a path graph") {
    const MetricClosure c = metric_closure(path_graph_abc());
    CHECK(c.dist(0, 2) == 2.0);
    CHECK(c.dist(2, 0) == 2.0);
    CHECK(c.path(0, 2) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("closure of a single vertex") {
    RawInstance raw;
    raw.vertex_count = 1;
    raw.depot = 0;
    const MetricClosure c = metric_closure(raw);
    CHECK(c.dist(0, 0) == 0.0);
    CHECK(c.path(0, 0) == std::vector<VertexId>{0});
}

TEST_CASE("closure of a 4-cycle with one heavy edge") {
    RawInstance raw;
    raw.vertex_count = 4;
    raw.depot = 0;
    raw.edges = {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {2, 3, 1.0, 0}, {3, 0, 10.0, 0}};
    const MetricClosure c = metric_closure(raw);
    CHECK(c.dist(0, 3) == 3.0);
    CHECK(c.dist(0, 3) == oracles::brute_shortest_path(4, raw.edges, 0, 3));
}

TEST_CASE("closure distances match path enumeration on random graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        RawInstance raw;
        raw.vertex_count = n;
        raw.depot = 0;
        for (int i = 1; i < n; ++i)
            raw.edges.push_back({static_cast<int>(rng() % i), i,
                                 static_cast<double>(1 + rng() % 9), 0});
        const int extra = static_cast<int>(rng() % 4);
        for (int i = 0; i < extra; ++i) {
            const int a = static_cast<int>(rng() % n);
            const int b = static_cast<int>(rng() % n);
            if (a != b) raw.edges.push_back({a, b, static_cast<double>(1 + rng() % 9), 0});
        }
        const MetricClosure c = metric_closure(raw);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(c.dist(a, b) == oracles::brute_shortest_path(n, raw.edges, a, b));
                // the stored canonical path realizes the distance exactly
                const std::vector<VertexId> path = c.path(a, b);
                double along = 0.0;
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    along += c.dist(path[i], path[i + 1]);
                CHECK(along == c.dist(a, b));
            }
    }
}

TEST_CASE("unreachable customer endpoint is an infeasible instance") {
    RawInstance raw;
    raw.vertex_count = 4;
    raw.depot = 0;
    raw.edges = {{0, 1, 1.0, 0}, {2, 3, 1.0, 1}};
    CHECK_THROWS_AS(metric_closure(raw), InfeasibleError);
}

TEST_CASE("normalize duplicates shared customer endpoints at distance zero") {
    // customers (0,1) and (1,2) share raw vertex 1
    RawInstance raw;
    raw.vertex_count = 3;
    raw.depot = 0;
    raw.capacity = 2;
    raw.edges = {{0, 1, 3.0, 1}, {1, 2, 4.0, 1}};
    auto [inst, lift] = normalize(raw);
    CHECK(inst.customer_count() == 2);
    CHECK(inst.vertex_count() == 5);
    CHECK(inst.validate().empty());
    // metric copies of raw vertex 1: exit of customer 0, entry of customer 1
    const VertexId copy_a = inst.customer(0).second;
    const VertexId copy_b = inst.customer(1).first;
    CHECK(lift.origin(copy_a) == 1);
    CHECK(lift.origin(copy_b) == 1);
    CHECK(inst.dist(copy_a, copy_b) == 0.0);
}

TEST_CASE("normalize of an empty-customer instance") {
    RawInstance raw;
    raw.vertex_count = 2;
    raw.depot = 0;
    raw.edges = {{0, 1, 5.0, 0}};
    auto [inst, lift] = normalize(raw);
    CHECK(inst.customer_count() == 0);
    CHECK(inst.vertex_count() == 1);
}

TEST_CASE("normalize keeps already-disjoint instances intact up to relabeling") {
    std::mt19937_64 rng(5);
    const RawInstance raw = generate(3, 2, GenMode::euclidean, 77, 40);
    auto [inst, lift] = normalize(raw);
    CHECK(inst.customer_count() == 3);
    for (int c = 0; c < 3; ++c) {
        const RawEdge& e = raw.edges[lift.customer_raw_edge(c)];
        CHECK(inst.customer_cost(c) == e.cost);
        CHECK(lift.origin(inst.customer(c).first) == e.u);
        CHECK(lift.origin(inst.customer(c).second) == e.v);
    }
    CHECK(inst.validate().empty());
}

TEST_CASE("metric invariants hold exactly on integer instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GenMode mode = seed % 2 == 0 ? GenMode::euclidean : GenMode::random_metric;
        const RawInstance raw = generate(1 + seed % 6, 3, mode, seed, 30);
        auto [inst, lift] = normalize(raw);
        CHECK(inst.validate().empty());
        const int n = inst.vertex_count();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(inst.dist(a, b) == inst.dist(b, a));
                for (int h = 0; h < n; ++h)
                    CHECK(inst.dist(a, h) <= inst.dist(a, b) + inst.dist(b, h));
            }
    }
}

TEST_CASE("lift expands a metric connector to its raw path") {
    // depot a--b--c with the single customer (c, d) hanging further out
    RawInstance raw;
    raw.vertex_count = 4;
    raw.depot = 0;
    raw.edges = {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {2, 3, 2.0, 1}};
    auto [inst, lift] = normalize(raw);
    const Solution sol = make_solution({make_route({{0, Orientation::forward}}, inst)});
    const LiftedSolution lifted = lift_solution(sol, lift);
    REQUIRE(lifted.routes.size() == 1);
    CHECK(lifted.routes[0].walk == std::vector<VertexId>{0, 1, 2, 3, 2, 1, 0});
    CHECK(lifted.total_cost == sol.total_cost);
}

TEST_CASE("lift of an already-metric instance is the identity walk") {
    const RawInstance raw = generate(2, 2, GenMode::euclidean, 9, 25);
    auto [inst, lift] = normalize(raw);
    const Solution sol = make_solution(
        {make_route({{0, Orientation::forward}}, inst), make_route({{1, Orientation::reversed}}, inst)});
    const LiftedSolution lifted = lift_solution(sol, lift);
    CHECK(lifted.total_cost == sol.total_cost);
    for (const LiftedRoute& r : lifted.routes) {
        CHECK(r.walk.front() == raw.depot);
        CHECK(r.walk.back() == raw.depot);
        CHECK(r.walk.size() == 4);  // depot, two endpoints, depot
    }
}

TEST_CASE("lifted cost equals metric cost exactly across random instances") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const GenMode mode = seed % 2 == 0 ? GenMode::euclidean : GenMode::random_metric;
        const RawInstance raw = generate(3, 2, mode, seed, 50);
        auto [inst, lift] = normalize(raw);
        std::vector<Route> routes;
        routes.push_back(make_route({{0, Orientation::forward}, {2, Orientation::reversed}}, inst));
        routes.push_back(make_route({{1, Orientation::forward}}, inst));
        const Solution sol = make_solution(std::move(routes));
        const LiftedSolution lifted = lift_solution(sol, lift);
        CHECK(lifted.total_cost == sol.total_cost);
        // serving correspondence: each route's walk contains its customers'
        // raw edges in order
        for (size_t ri = 0; ri < sol.routes.size(); ++ri) {
            size_t walk_pos = 0;
            for (const ServedCustomer& sc : sol.routes[ri].served) {
                const RawEdge& e = raw.edges[lift.customer_raw_edge(sc.customer)];
                const VertexId enter = sc.dir == Orientation::forward ? e.u : e.v;
                const VertexId leave = sc.dir == Orientation::forward ? e.v : e.u;
                bool found = false;
                const auto& walk = lifted.routes[ri].walk;
                for (; walk_pos + 1 < walk.size(); ++walk_pos)
                    if (walk[walk_pos] == enter && walk[walk_pos + 1] == leave) {
                        found = true;
                        break;
                    }
                CHECK(found);
            }
        }
    }
}
