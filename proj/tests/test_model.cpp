#include <random>

#include "doctest.h"
#include "carp/model.hpp"
#include "testkit.hpp"

using namespace carp;

TEST_CASE("route cost of the 3-4-5 triangle route") {
    const MetricInstance inst = testkit::triangle_instance();
    const Route r = make_route({{0, Orientation::forward}}, inst);
    CHECK(r.cost == 12.0);
    CHECK(route_cost(r, inst) == 12.0);
}

TEST_CASE("empty route is rejected") {
    const MetricInstance inst = testkit::triangle_instance();
    Route r;
    CHECK_THROWS_AS(route_cost(r, inst), InvalidArgumentError);
}

TEST_CASE("route over the zero metric costs nothing") {
    const MetricInstance inst = testkit::zero_instance(3, 2);
    const Route r = make_route({{0, Orientation::forward}, {2, Orientation::reversed}}, inst);
    CHECK(r.cost == 0.0);
}

TEST_CASE("route cost rejects bad customer indices") {
    const MetricInstance inst = testkit::triangle_instance();
    Route r;
    r.served = {{5, Orientation::forward}};
    CHECK_THROWS_AS(route_cost(r, inst), InvalidArgumentError);
}

TEST_CASE("route cost is invariant under full reversal") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const MetricInstance inst = testkit::random_l1_instance(1 + rng() % 6, 9, rng);
        const RppTour tour = testkit::random_tour(inst, rng);
        Route fwd;
        fwd.served = tour.order;
        std::vector<ServedCustomer> rev(tour.order.rbegin(), tour.order.rend());
        for (ServedCustomer& sc : rev) sc.dir = flip(sc.dir);
        Route bwd;
        bwd.served = rev;
        CHECK(route_cost(fwd, inst) == route_cost(bwd, inst));
    }
}

TEST_CASE("check_solution reports uncovered customers") {
    std::mt19937_64 rng(3);
    const MetricInstance inst = testkit::random_l1_instance(4, 3, rng);
    Solution sol;
    sol.routes.push_back(make_route({{0, Orientation::forward}, {1, Orientation::forward}}, inst));
    sol.routes.push_back(make_route({{2, Orientation::forward}}, inst));
    sol.total_cost = sol.routes[0].cost + sol.routes[1].cost;
    const FeasibilityReport rep = check_solution(sol, inst);
    CHECK_FALSE(rep.feasible());
    REQUIRE(rep.uncovered.size() == 1);
    CHECK(rep.uncovered[0] == 3);
}

TEST_CASE("check_solution reports capacity violations") {
    const MetricInstance inst = testkit::zero_instance(3, 2);
    Solution sol;
    sol.routes.push_back(make_route(
        {{0, Orientation::forward}, {1, Orientation::forward}, {2, Orientation::forward}}, inst));
    sol.total_cost = sol.routes[0].cost;
    const FeasibilityReport rep = check_solution(sol, inst);
    CHECK_FALSE(rep.feasible());
    REQUIRE(rep.oversized_routes.size() == 1);
}

TEST_CASE("check_solution reports stored-cost drift") {
    const MetricInstance inst = testkit::triangle_instance();
    Solution sol;
    Route r = make_route({{0, Orientation::forward}}, inst);
    r.cost += 1.0;
    sol.routes.push_back(r);
    sol.total_cost = r.cost;
    const FeasibilityReport rep = check_solution(sol, inst);
    CHECK_FALSE(rep.feasible());
    CHECK(rep.cost_mismatches.size() == 1);
}

TEST_CASE("solution total equals route-cost sum exactly on integer metrics") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const MetricInstance inst = testkit::random_l1_instance(1 + rng() % 5, 3, rng);
        std::vector<Route> routes;
        double total = 0.0;
        for (int c = 0; c < inst.customer_count(); ++c) {
            routes.push_back(make_route({{c, Orientation::forward}}, inst));
            total += routes.back().cost;
        }
        const Solution sol = make_solution(std::move(routes));
        CHECK(sol.total_cost == total);
        CHECK(check_solution(sol, inst).feasible());
    }
}

TEST_CASE("metric validation catches defects") {
    SUBCASE("well-formed instance") {
        const MetricInstance inst = testkit::collinear_two_customers();
        CHECK(inst.validate().empty());
    }
    SUBCASE("triangle violation") {
        std::vector<double> d{
            0, 1, 9,  //
            1, 0, 1,  //
            9, 1, 0,  //
        };
        const MetricInstance inst = testkit::metric_from_matrix(1, std::move(d), 1);
        CHECK_FALSE(inst.validate().empty());
    }
}

TEST_CASE("raw instance validation") {
    RawInstance raw;
    raw.vertex_count = 3;
    raw.depot = 0;
    raw.capacity = 1;
    raw.edges = {{0, 1, 2.0, 0}, {1, 2, 1.0, 1}};
    CHECK_NOTHROW(raw.validate());

    SUBCASE("demand-1 self loop rejected") {
        raw.edges.push_back({2, 2, 1.0, 1});
        CHECK_THROWS_AS(raw.validate(), InvalidArgumentError);
    }
    SUBCASE("demand outside 0/1 rejected") {
        raw.edges.push_back({0, 2, 1.0, 3});
        CHECK_THROWS_AS(raw.validate(), InvalidArgumentError);
    }
    SUBCASE("negative cost rejected") {
        raw.edges.push_back({0, 2, -1.0, 0});
        CHECK_THROWS_AS(raw.validate(), InvalidArgumentError);
    }
}
