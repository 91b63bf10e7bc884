#include "carp/matching.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace carp {

namespace {

using Weight = std::int64_t;

// Primal-dual blossom solver for maximum-weight matching on a dense graph,
// integer weights, O(n^3) class. Indices are 1-based; ids above n are
// contracted blossoms. Minimum-cost perfect matching is obtained by the
// weight transform w = K - c with K large enough that maximum weight implies
// maximum cardinality.
class WeightedBlossom {
public:
    explicit WeightedBlossom(const std::vector<std::vector<Weight>>& w)
        : n_(static_cast<int>(w.size())), slots_(2 * n_ + 2) {
        g_.assign(slots_, std::vector<Edge>(slots_));
        for (int u = 0; u < slots_; ++u)
            for (int v = 0; v < slots_; ++v) g_[u][v] = Edge{u, v, 0};
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v)
                if (u != v) g_[u][v].w = w[u - 1][v - 1];
        lab_.assign(slots_, 0);
        match_.assign(slots_, 0);
        slack_.assign(slots_, 0);
        st_.assign(slots_, 0);
        pa_.assign(slots_, 0);
        s_.assign(slots_, -1);
        vis_.assign(slots_, 0);
        flower_.assign(slots_, {});
        flower_from_.assign(slots_, std::vector<int>(n_ + 1, 0));
    }

    // Returns matched partner per vertex (1-based), or 0 if unmatched.
    std::vector<int> solve() {
        n_x_ = n_;
        Weight w_max = 0;
        for (int u = 1; u <= n_; ++u) {
            match_[u] = 0;
            st_[u] = u;
            flower_[u].clear();
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        }
        st_[0] = 0;
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (augment_phase()) {
        }
        return {match_.begin(), match_.begin() + n_ + 1};
    }

private:
    struct Edge {
        int u = 0;
        int v = 0;
        Weight w = 0;
    };

    Weight slack_of(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || slack_of(g_[u][x]) < slack_of(g_[slack_[x]][x])) slack_[x] = u;
    }

    void recompute_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void queue_push(int x) {
        if (x <= n_) {
            queue_.push_back(x);
        } else {
            for (int member : flower_[x]) queue_push(member);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int member : flower_[x]) set_st(member, b);
    }

    int blossom_split(int b, int xr) {
        const int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                        flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u <= n_) return;
        const Edge e = g_[u][v];
        const int xr = flower_from_[u][e.u];
        const int pr = blossom_split(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment_path(int u, int v) {
        for (;;) {
            const int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int lowest_common_ancestor(int u, int v) {
        ++timestamp_;
        while (u || v) {
            if (u) {
                if (vis_[u] == timestamp_) return u;
                vis_[u] = timestamp_;
                u = st_[match_[u]];
                if (u) u = st_[pa_[u]];
            }
            std::swap(u, v);
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            queue_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            queue_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (const int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || slack_of(g_[xs][x]) < slack_of(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        recompute_slack(b);
    }

    void expand_blossom(int b) {
        for (const int member : flower_[b]) set_st(member, member);
        const int xr = flower_from_[b][g_[b][pa_[b]].u];
        const int pr = blossom_split(b, xr);
        for (int i = 0; i < pr; i += 2) {
            const int xs = flower_[b][i];
            const int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            recompute_slack(xns);
            queue_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
            const int xs = flower_[b][i];
            s_[xs] = -1;
            recompute_slack(xs);
        }
        st_[b] = 0;
    }

    // Returns true if the phase augmented the matching.
    bool on_tight_edge(const Edge& e) {
        const int u = st_[e.u];
        const int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            const int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            queue_push(nu);
        } else if (s_[v] == 0) {
            const int lca = lowest_common_ancestor(u, v);
            if (!lca) {
                augment_path(u, v);
                augment_path(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool augment_phase() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        queue_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                queue_push(x);
            }
        if (queue_.empty()) return false;
        for (;;) {
            while (!queue_.empty()) {
                const int u = queue_.front();
                queue_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (slack_of(g_[u][v]) == 0) {
                            if (on_tight_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            Weight d = std::numeric_limits<Weight>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, slack_of(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, slack_of(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[st_[b]] == 0)
                        lab_[b] += d * 2;
                    else if (s_[st_[b]] == 1)
                        lab_[b] -= d * 2;
                }
            queue_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    slack_of(g_[slack_[x]][x]) == 0)
                    if (on_tight_edge(g_[slack_[x]][x])) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_ = 0;
    int n_x_ = 0;
    int slots_ = 0;
    int timestamp_ = 0;
    std::vector<std::vector<Edge>> g_;
    std::vector<Weight> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> queue_;
};

// Smallest power-of-ten scale that makes every cost integral (within noise);
// falls back to a magnitude-bounded scale for irrational inputs.
double pick_scale(const std::vector<std::vector<double>>& cost) {
    double max_cost = 0.0;
    for (const auto& row : cost)
        for (double c : row) max_cost = std::max(max_cost, std::abs(c));
    double scale = 1.0;
    for (; scale <= 1e6; scale *= 10.0) {
        if (max_cost * scale > 1e12) break;
        bool integral = true;
        for (const auto& row : cost) {
            for (double c : row) {
                const double scaled = c * scale;
                if (std::abs(scaled - std::llround(scaled)) > 1e-6 * std::max(1.0, std::abs(scaled))) {
                    integral = false;
                    break;
                }
            }
            if (!integral) break;
        }
        if (integral) return scale;
    }
    scale = 1.0;
    while (scale < 1e6 && max_cost * scale * 10.0 <= 1e12) scale *= 10.0;
    return scale;
}

std::vector<std::vector<Weight>> scaled_costs(const std::vector<std::vector<double>>& cost,
                                              double scale) {
    const int n = static_cast<int>(cost.size());
    std::vector<std::vector<Weight>> out(n, std::vector<Weight>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = std::llround(cost[i][j] * scale);
    return out;
}

// Minimum-cost perfect matching in integer space; returns partner indices.
std::vector<int> min_perfect_partners(const std::vector<std::vector<Weight>>& c) {
    const int n = static_cast<int>(c.size());
    Weight max_c = 0;
    for (const auto& row : c)
        for (Weight v : row) max_c = std::max(max_c, v);
    const Weight big = max_c * (n / 2) + 1;
    std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) w[i][j] = big - c[i][j];
    WeightedBlossom solver(w);
    std::vector<int> match = solver.solve();
    std::vector<int> partner(n, -1);
    int matched = 0;
    for (int u = 1; u <= n; ++u) {
        if (match[u] > 0) {
            partner[u - 1] = match[u] - 1;
            ++matched;
        }
    }
    if (matched != n)
        throw Error(ErrorCode::internal, "matching solver failed to produce a perfect matching");
    return partner;
}

Weight matching_cost_int(const std::vector<std::vector<Weight>>& c, const std::vector<int>& subset) {
    const int n = static_cast<int>(subset.size());
    std::vector<std::vector<Weight>> sub(n, std::vector<Weight>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub[i][j] = c[subset[i]][subset[j]];
    const std::vector<int> partner = min_perfect_partners(sub);
    Weight total = 0;
    for (int i = 0; i < n; ++i)
        if (partner[i] > i) total += sub[i][partner[i]];
    return total;
}

constexpr int kCanonicalLimit = 48;

}  // namespace

Matching min_cost_perfect_matching(std::span<const VertexId> vertices, const DistanceFn& dist) {
    Matching result;
    const int n = static_cast<int>(vertices.size());
    if (n == 0) return result;
    if (n % 2 != 0)
        throw InvalidArgumentError("perfect matching requires an even vertex count, got " +
                                   std::to_string(n));
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());

    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cost[i][j] = dist(ids[i], ids[j]);
    const double scale = pick_scale(cost);
    const std::vector<std::vector<Weight>> cint = scaled_costs(cost, scale);

    std::vector<std::pair<int, int>> index_pairs;
    if (n == 2) {
        index_pairs.emplace_back(0, 1);
    } else if (n <= kCanonicalLimit) {
        // Lexicographically smallest optimal matching: fix the smallest open
        // vertex to the smallest partner that preserves the optimal value.
        std::vector<int> remaining(n);
        std::iota(remaining.begin(), remaining.end(), 0);
        Weight target = matching_cost_int(cint, remaining);
        while (remaining.size() > 2) {
            const int u = remaining.front();
            bool fixed = false;
            for (size_t vi = 1; vi < remaining.size() && !fixed; ++vi) {
                const int v = remaining[vi];
                std::vector<int> rest;
                rest.reserve(remaining.size() - 2);
                for (int x : remaining)
                    if (x != u && x != v) rest.push_back(x);
                const Weight rest_cost = matching_cost_int(cint, rest);
                if (cint[u][v] + rest_cost == target) {
                    index_pairs.emplace_back(u, v);
                    target -= cint[u][v];
                    remaining = std::move(rest);
                    fixed = true;
                }
            }
            if (!fixed)
                throw Error(ErrorCode::internal, "matching refinement lost the optimal value");
        }
        index_pairs.emplace_back(remaining[0], remaining[1]);
    } else {
        const std::vector<int> partner = min_perfect_partners(cint);
        for (int i = 0; i < n; ++i)
            if (partner[i] > i) index_pairs.emplace_back(i, partner[i]);
    }

    for (const auto& [a, b] : index_pairs) {
        result.pairs.emplace_back(ids[a], ids[b]);  // ids are sorted and a < b
        result.cost += cost[a][b];
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

namespace {

void oracle_recurse(const std::vector<std::vector<double>>& cost, std::vector<int>& open,
                    std::vector<std::pair<int, int>>& current, double acc,
                    std::vector<std::pair<int, int>>& best, double& best_cost) {
    if (open.empty()) {
        if (acc < best_cost) {
            best_cost = acc;
            best = current;
        }
        return;
    }
    const int u = open.front();
    std::vector<int> rest(open.begin() + 1, open.end());
    for (size_t i = 0; i < rest.size(); ++i) {
        const int v = rest[i];
        std::vector<int> next_open;
        next_open.reserve(rest.size() - 1);
        for (size_t j = 0; j < rest.size(); ++j)
            if (j != i) next_open.push_back(rest[j]);
        current.emplace_back(u, v);
        oracle_recurse(cost, next_open, current, acc + cost[u][v], best, best_cost);
        current.pop_back();
    }
}

}  // namespace

Matching matching_oracle(std::span<const VertexId> vertices, const DistanceFn& dist) {
    Matching result;
    const int n = static_cast<int>(vertices.size());
    if (n == 0) return result;
    if (n % 2 != 0)
        throw InvalidArgumentError("perfect matching requires an even vertex count, got " +
                                   std::to_string(n));
    if (n > 12)
        throw InvalidArgumentError("matching oracle is capped at 12 vertices, got " +
                                   std::to_string(n));
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cost[i][j] = dist(ids[i], ids[j]);

    std::vector<int> open(n);
    std::iota(open.begin(), open.end(), 0);
    std::vector<std::pair<int, int>> current, best;
    double best_cost = std::numeric_limits<double>::infinity();
    oracle_recurse(cost, open, current, 0.0, best, best_cost);

    for (const auto& [a, b] : best) {
        result.pairs.emplace_back(ids[a], ids[b]);
        result.cost += cost[a][b];
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

}  // namespace carp
