#include <cmath>
#include <random>
#include <numeric>

#include "doctest.h"
#include "carp/matching.hpp"
#include "oracles.hpp"

using namespace carp;

namespace {

DistanceFn line_metric() {
    return [](VertexId a, VertexId b) { return std::abs(static_cast<double>(a - b)); };
}

// Random symmetric integer distance matrix made metric by shortest paths.
std::vector<std::vector<double>> random_integer_metric(int n, std::mt19937_64& rng, int range) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = 1 + static_cast<double>(rng() % range);
    for (int w = 0; w < n; ++w)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][w] + d[w][j]);
    return d;
}

}  // namespace

TEST_CASE("four collinear points pair up adjacent") {
    const std::vector<VertexId> pts{0, 1, 2, 3};
    const Matching m = min_cost_perfect_matching(pts, line_metric());
    CHECK(m.cost == 2.0);
    REQUIRE(m.pairs.size() == 2);
    CHECK(m.pairs[0] == EdgePair{0, 1});
    CHECK(m.pairs[1] == EdgePair{2, 3});
    const Matching oracle = matching_oracle(pts, line_metric());
    CHECK(oracle.cost == 2.0);
    CHECK(oracle.pairs == m.pairs);
}

TEST_CASE("two points form the forced pair") {
    const std::vector<VertexId> pts{4, 9};
    const Matching m = min_cost_perfect_matching(pts, line_metric());
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.pairs[0] == EdgePair{4, 9});
    CHECK(m.cost == 5.0);
}

TEST_CASE("zero metric matches everything at zero cost") {
    const std::vector<VertexId> pts{0, 1, 2, 3, 4, 5};
    const DistanceFn zero = [](VertexId, VertexId) { return 0.0; };
    const Matching m = min_cost_perfect_matching(pts, zero);
    CHECK(m.cost == 0.0);
    CHECK(m.pairs.size() == 3);
}

TEST_CASE("odd vertex sets are rejected") {
    const std::vector<VertexId> pts{0, 1, 2};
    CHECK_THROWS_AS(min_cost_perfect_matching(pts, line_metric()), InvalidArgumentError);
    CHECK_THROWS_AS(matching_oracle(pts, line_metric()), InvalidArgumentError);
}

TEST_CASE("oracle size cap") {
    std::vector<VertexId> pts(14);
    for (int i = 0; i < 14; ++i) pts[i] = i;
    CHECK_THROWS_AS(matching_oracle(pts, line_metric()), InvalidArgumentError);
}

TEST_CASE("blossom equals the exhaustive oracle on random integer metrics") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 5));  // 2..10
        const auto d = random_integer_metric(n, rng, 20);
        const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
        std::vector<VertexId> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        const Matching fast = min_cost_perfect_matching(pts, dist);
        const Matching slow = matching_oracle(pts, dist);
        CHECK(fast.cost == slow.cost);
        CHECK(fast.pairs == slow.pairs);  // both canonicalize lexicographically
    }
}

TEST_CASE("blossom equals the oracle on random non-metric weights") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 6));  // 2..12
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = static_cast<double>(rng() % 50);
        const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
        std::vector<VertexId> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        CHECK(min_cost_perfect_matching(pts, dist).cost == matching_oracle(pts, dist).cost);
    }
}

TEST_CASE("matching cost ignores input vertex order") {
    std::mt19937_64 rng(41);
    const auto d = random_integer_metric(10, rng, 30);
    const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
    std::vector<VertexId> pts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const Matching base = min_cost_perfect_matching(pts, dist);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        for (size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng() % i]);
        const Matching m = min_cost_perfect_matching(pts, dist);
        CHECK(m.cost == base.cost);
        CHECK(m.pairs == base.pairs);
    }
}

TEST_CASE("metric matching is at most half the optimal cycle") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 * (2 + static_cast<int>(rng() % 3));  // 4..8
        const auto d = random_integer_metric(n, rng, 25);
        const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
        std::vector<VertexId> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        const double matching = min_cost_perfect_matching(pts, dist).cost;
        const double cycle = oracles::brute_tsp_cycle(pts, dist);
        CHECK(approx_leq(matching, cycle / 2.0));
    }
}

TEST_CASE("blossom equals the bitmask DP on sets beyond the exhaustive cap") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 14 + 2 * static_cast<int>(rng() % 4);  // 14, 16, 18 or 20
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                d[i][j] = d[j][i] = static_cast<double>(rng() % 40);
        const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
        std::vector<VertexId> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        CHECK(min_cost_perfect_matching(pts, dist).cost == oracles::dp_min_perfect_matching(d));
    }
}

TEST_CASE("blossom handles larger point sets beyond the canonical limit") {
    std::mt19937_64 rng(67);
    const int n = 60;
    const auto d = random_integer_metric(n, rng, 100);
    const DistanceFn dist = [&d](VertexId a, VertexId b) { return d[a][b]; };
    std::vector<VertexId> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i;
    const Matching m = min_cost_perfect_matching(pts, dist);
    CHECK(m.pairs.size() == 30);
    // greedy pairing upper-bounds the optimum
    double greedy = 0.0;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int best = -1;
        for (int j = i + 1; j < n; ++j)
            if (!used[j] && (best == -1 || d[i][j] < d[i][best])) best = j;
        used[i] = used[best] = 1;
        greedy += d[i][best];
    }
    CHECK(approx_leq(m.cost, greedy));
}
