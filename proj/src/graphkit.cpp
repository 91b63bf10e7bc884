#include "carp/graphkit.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace carp {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller id as representative
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

void MultiEdgeSet::add(VertexId u, VertexId v, int multiplicity) {
    if (multiplicity <= 0) throw InvalidArgumentError("edge multiplicity must be positive");
    edges_[ordered_pair(u, v)] += multiplicity;
}

void MultiEdgeSet::add_all(const MultiEdgeSet& other) {
    for (const auto& [e, mult] : other.edges_) edges_[e] += mult;
}

int MultiEdgeSet::multiplicity(VertexId u, VertexId v) const {
    const auto it = edges_.find(ordered_pair(u, v));
    return it == edges_.end() ? 0 : it->second;
}

int MultiEdgeSet::total_multiplicity() const {
    int total = 0;
    for (const auto& [e, mult] : edges_) total += mult;
    return total;
}

double MultiEdgeSet::total_cost(const DistanceFn& dist) const {
    double total = 0.0;
    for (const auto& [e, mult] : edges_) total += mult * dist(e.first, e.second);
    return total;
}

std::vector<EdgePair> constrained_mst(std::span<const VertexId> vertices,
                                      std::span<const EdgePair> required, const DistanceFn& dist) {
    const int n = static_cast<int>(vertices.size());
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    std::unordered_map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[ids[i]] = i;

    std::vector<EdgePair> tree;
    UnionFind uf(n);
    for (const EdgePair& e : required) {
        if (!index.count(e.first) || !index.count(e.second))
            throw InvalidArgumentError("required edge endpoint outside the vertex set");
        if (!uf.unite(index.at(e.first), index.at(e.second)))
            throw InvalidArgumentError("required edges contain a cycle");
        tree.push_back(ordered_pair(e.first, e.second));
    }

    struct Candidate {
        double cost;
        VertexId u, v;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            candidates.push_back({dist(ids[i], ids[j]), ids[i], ids[j]});
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    for (const Candidate& c : candidates) {
        if (static_cast<int>(tree.size()) == n - 1) break;
        if (uf.unite(index.at(c.u), index.at(c.v))) tree.push_back({c.u, c.v});
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::vector<std::vector<VertexId>> components_of(std::span<const VertexId> vertices,
                                                 const MultiEdgeSet& edges) {
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    std::unordered_map<VertexId, int> index;
    for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(ids.size()));
    for (const auto& [e, mult] : edges.edges()) {
        if (!index.count(e.first) || !index.count(e.second))
            throw InvalidArgumentError("edge endpoint outside the vertex set");
        uf.unite(index.at(e.first), index.at(e.second));
    }
    std::map<int, std::vector<VertexId>> groups;
    for (size_t i = 0; i < ids.size(); ++i) groups[uf.find(static_cast<int>(i))].push_back(ids[i]);
    std::vector<std::vector<VertexId>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<EdgePair> connect_components(const std::vector<std::vector<VertexId>>& components,
                                         const DistanceFn& dist) {
    if (components.empty()) throw InvalidArgumentError("no components to connect");
    const int c = static_cast<int>(components.size());

    struct Candidate {
        double cost;
        EdgePair edge;
        int a, b;
    };
    // One candidate per component pair: the cheapest cross pair of vertices,
    // smallest (id,id) on cost ties.
    std::vector<Candidate> candidates;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            bool have = false;
            Candidate best{};
            for (VertexId u : components[a])
                for (VertexId v : components[b]) {
                    const double d = dist(u, v);
                    const EdgePair e = ordered_pair(u, v);
                    if (!have || d < best.cost || (d == best.cost && e < best.edge)) {
                        best = {d, e, a, b};
                        have = true;
                    }
                }
            candidates.push_back(best);
        }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.cost != y.cost) return x.cost < y.cost;
        return x.edge < y.edge;
    });

    UnionFind uf(c);
    std::vector<EdgePair> added;
    for (const Candidate& cand : candidates) {
        if (static_cast<int>(added.size()) == c - 1) break;
        if (uf.unite(cand.a, cand.b)) added.push_back(cand.edge);
    }
    std::sort(added.begin(), added.end());
    return added;
}

std::vector<VertexId> euler_tour(const MultiEdgeSet& graph, VertexId start) {
    // Expand multiplicities into edge instances and build sorted adjacency.
    struct EdgeInstance {
        VertexId to;
        int id;
    };
    std::map<VertexId, std::vector<EdgeInstance>> adj;
    int edge_count = 0;
    for (const auto& [e, mult] : graph.edges()) {
        for (int i = 0; i < mult; ++i) {
            adj[e.first].push_back({e.second, edge_count});
            adj[e.second].push_back({e.first, edge_count});
            ++edge_count;
        }
    }
    for (auto& [v, list] : adj) {
        if (list.size() % 2 != 0)
            throw InvalidArgumentError("vertex " + std::to_string(v) + " has odd degree " +
                                       std::to_string(list.size()));
        std::sort(list.begin(), list.end(), [](const EdgeInstance& a, const EdgeInstance& b) {
            if (a.to != b.to) return a.to < b.to;
            return a.id < b.id;
        });
    }
    if (edge_count == 0) return {start};
    if (!adj.count(start))
        throw InvalidArgumentError("start vertex " + std::to_string(start) +
                                   " is isolated in the multigraph");

    std::vector<char> used(edge_count, 0);
    std::map<VertexId, size_t> cursor;
    std::vector<VertexId> stack{start};
    std::vector<VertexId> walk;
    while (!stack.empty()) {
        const VertexId at = stack.back();
        auto& list = adj[at];
        size_t& i = cursor[at];
        while (i < list.size() && used[list[i].id]) ++i;
        if (i == list.size()) {
            walk.push_back(at);
            stack.pop_back();
        } else {
            used[list[i].id] = 1;
            stack.push_back(list[i].to);
        }
    }
    if (static_cast<int>(walk.size()) != edge_count + 1) {
        // Some edges were unreachable from start: name one offending vertex.
        for (const auto& [e, mult] : graph.edges()) {
            bool found = false;
            for (VertexId v : walk)
                if (v == e.first) found = true;
            if (!found)
                throw InvalidArgumentError("multigraph is disconnected: vertex " +
                                           std::to_string(e.first) +
                                           " is not reachable from the start vertex");
        }
        throw InvalidArgumentError("multigraph is disconnected");
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

RppTour shortcut_to_rpp(std::span<const VertexId> walk, const MetricInstance& inst) {
    const int m = inst.customer_count();
    if (m == 0) return RppTour{};
    if (walk.size() < 2 || walk.front() != kDepot || walk.back() != kDepot)
        throw InvalidArgumentError("walk must start and end at the depot");

    std::vector<int> owner(inst.vertex_count(), -1);
    for (int i = 0; i < m; ++i) {
        owner[inst.customer(i).first] = i;
        owner[inst.customer(i).second] = i;
    }

    std::vector<char> seen(m, 0);
    std::vector<ServedCustomer> order;
    order.reserve(m);
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        const VertexId a = walk[i];
        const VertexId b = walk[i + 1];
        if (a == b || a == kDepot || b == kDepot) continue;
        const int c = owner[a];
        if (c >= 0 && owner[b] == c && !seen[c]) {
            seen[c] = 1;
            const Orientation dir =
                a == inst.customer(c).first ? Orientation::forward : Orientation::reversed;
            order.push_back({c, dir});
        }
    }
    for (int c = 0; c < m; ++c)
        if (!seen[c])
            throw InvalidArgumentError("customer " + std::to_string(c) +
                                       " is never traversed by the walk");
    return make_tour(std::move(order), inst);
}

}  // namespace carp
