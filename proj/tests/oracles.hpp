#pragma once

// Independent brute-force oracles. Everything here enumerates; nothing calls
// the implementation paths it is used to check.

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "carp/graphkit.hpp"
#include "carp/matching.hpp"
#include "carp/model.hpp"

namespace oracles {

using carp::DistanceFn;
using carp::EdgePair;
using carp::MetricInstance;
using carp::Orientation;
using carp::ServedCustomer;
using carp::VertexId;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimum-cost simple path by DFS enumeration over a raw edge list.
inline double brute_shortest_path(int n, const std::vector<carp::RawEdge>& edges, VertexId s,
                                  VertexId t) {
    double best = s == t ? 0.0 : kInf;
    std::vector<char> used(n, 0);
    used[s] = 1;
    auto dfs = [&](auto&& self, VertexId at, double acc) -> void {
        if (at == t) {
            best = std::min(best, acc);
            return;
        }
        for (const carp::RawEdge& e : edges) {
            VertexId next = -1;
            if (e.u == at && !used[e.v]) next = e.v;
            if (e.v == at && !used[e.u]) next = e.u;
            if (next < 0) continue;
            used[next] = 1;
            self(self, next, acc + e.cost);
            used[next] = 0;
        }
    };
    dfs(dfs, s, 0.0);
    return best;
}

// Minimum spanning tree containing all required edges, by enumeration over
// non-required edge subsets. Vertices <= 7.
inline double brute_constrained_tree(const std::vector<VertexId>& vertices,
                                     const std::vector<EdgePair>& required,
                                     const DistanceFn& dist) {
    const int n = static_cast<int>(vertices.size());
    std::vector<EdgePair> optional;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const EdgePair e = carp::ordered_pair(vertices[i], vertices[j]);
            if (std::find(required.begin(), required.end(), e) == required.end())
                optional.push_back(e);
        }
    const int need = n - 1 - static_cast<int>(required.size());
    double best = kInf;
    std::vector<int> pick;
    auto connected = [&](const std::vector<EdgePair>& tree) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto index_of = [&](VertexId v) {
            return static_cast<int>(std::find(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
        };
        int merges = 0;
        for (const EdgePair& e : tree) {
            const int a = find(index_of(e.first));
            const int b = find(index_of(e.second));
            if (a == b) return false;  // cycle
            parent[a] = b;
            ++merges;
        }
        return merges == n - 1;
    };
    auto recurse = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            std::vector<EdgePair> tree = required;
            double cost = 0.0;
            for (const EdgePair& e : required) cost += dist(e.first, e.second);
            for (int idx : pick) {
                tree.push_back(optional[idx]);
                cost += dist(optional[idx].first, optional[idx].second);
            }
            if (cost < best && connected(tree)) best = cost;
            return;
        }
        for (int i = from; i + left <= static_cast<int>(optional.size()); ++i) {
            pick.push_back(i);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    if (need < 0) return kInf;
    recurse(recurse, 0, need);
    return best;
}

// Optimal tour over all customers by permutation x orientation enumeration.
inline double brute_rpp(const MetricInstance& inst) {
    const int m = inst.customer_count();
    if (m == 0) return 0.0;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInf;
    do {
        for (int bits = 0; bits < (1 << m); ++bits) {
            std::vector<ServedCustomer> order;
            for (int i = 0; i < m; ++i)
                order.push_back({perm[i], (bits >> i & 1) ? Orientation::reversed
                                                          : Orientation::forward});
            best = std::min(best, carp::walk_cost(order, inst));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum route cost serving exactly `group`, by enumeration.
inline double brute_group_route(const std::vector<int>& group, const MetricInstance& inst) {
    std::vector<int> perm = group;
    std::sort(perm.begin(), perm.end());
    const int g = static_cast<int>(perm.size());
    double best = kInf;
    do {
        for (int bits = 0; bits < (1 << g); ++bits) {
            std::vector<ServedCustomer> order;
            for (int i = 0; i < g; ++i)
                order.push_back({perm[i], (bits >> i & 1) ? Orientation::reversed
                                                          : Orientation::forward});
            best = std::min(best, carp::walk_cost(order, inst));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Exact optimum by set-partition enumeration with per-block enumeration.
inline double brute_carp(const MetricInstance& inst) {
    const int m = inst.customer_count();
    if (m == 0) return 0.0;
    const int k = inst.capacity();
    std::vector<std::vector<int>> blocks;
    double best = kInf;
    auto recurse = [&](auto&& self, int customer) -> void {
        if (customer == m) {
            double total = 0.0;
            for (const std::vector<int>& b : blocks) total += brute_group_route(b, inst);
            best = std::min(best, total);
            return;
        }
        const size_t existing = blocks.size();
        for (size_t bi = 0; bi < existing; ++bi) {
            if (static_cast<int>(blocks[bi].size()) < k) {
                blocks[bi].push_back(customer);
                self(self, customer + 1);
                blocks[bi].pop_back();
            }
        }
        blocks.push_back({customer});
        self(self, customer + 1);
        blocks.pop_back();
    };
    recurse(recurse, 0);
    return best;
}

// Minimum over every contiguous cyclic partition of the tour into fragments
// of at most k customers.
inline double brute_cyclic_partition(const carp::RppTour& tour, const MetricInstance& inst) {
    const int m = static_cast<int>(tour.order.size());
    const int k = inst.capacity();
    if (m == 0) return 0.0;
    double best = kInf;
    auto fragment_cost = [&](int start, int len) {
        std::vector<ServedCustomer> frag;
        for (int i = 0; i < len; ++i) frag.push_back(tour.order[(start + i) % m]);
        return carp::walk_cost(frag, inst);
    };
    // First fragment starts at `s` (covering the wrap), then the line splits.
    for (int s = 0; s < m; ++s) {
        auto line = [&](auto&& self, int covered, double acc) -> void {
            if (acc >= best) return;
            if (covered == m) {
                best = std::min(best, acc);
                return;
            }
            for (int len = 1; len <= std::min(k, m - covered); ++len)
                self(self, covered + len, acc + fragment_cost(s + covered, len));
        };
        line(line, 0, 0.0);
    }
    return best;
}

// Minimum-cost perfect matching value by bitmask DP, up to ~20 vertices.
inline double dp_min_perfect_matching(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    std::vector<double> dp(size_t{1} << n, kInf);
    dp[0] = 0.0;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        int first = 0;
        while (!(mask >> first & 1)) ++first;
        for (int other = first + 1; other < n; ++other) {
            if (!(mask >> other & 1)) continue;
            const size_t rest = mask & ~(size_t{1} << first) & ~(size_t{1} << other);
            if (dp[rest] < kInf)
                dp[mask] = std::min(dp[mask], dp[rest] + cost[first][other]);
        }
    }
    return dp.back();
}

// Exact TSP cycle cost over a vertex set (start anywhere), by permutations.
inline double brute_tsp_cycle(const std::vector<VertexId>& vertices, const DistanceFn& dist) {
    const int n = static_cast<int>(vertices.size());
    if (n <= 1) return 0.0;
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    double best = kInf;
    do {
        double cost = dist(vertices[0], vertices[perm[0]]);
        for (int i = 0; i + 1 < n - 1; ++i) cost += dist(vertices[perm[i]], vertices[perm[i + 1]]);
        cost += dist(vertices[perm[n - 2]], vertices[0]);
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace oracles
