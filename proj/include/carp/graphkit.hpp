#pragma once

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "carp/matching.hpp"
#include "carp/model.hpp"

namespace carp {

using EdgePair = std::pair<VertexId, VertexId>;

inline EdgePair ordered_pair(VertexId a, VertexId b) { return a <= b ? EdgePair{a, b} : EdgePair{b, a}; }

// Undirected multiset of edges; unions add multiplicities.
class MultiEdgeSet {
public:
    void add(VertexId u, VertexId v, int multiplicity = 1);
    void add_all(const MultiEdgeSet& other);
    int multiplicity(VertexId u, VertexId v) const;
    int total_multiplicity() const;
    double total_cost(const DistanceFn& dist) const;

    const std::map<EdgePair, int>& edges() const { return edges_; }

private:
    std::map<EdgePair, int> edges_;
};

// Minimum-cost spanning tree over `vertices` constrained to contain every
// `required` edge (required edges must be acyclic). Returns the full tree,
// required edges included.
std::vector<EdgePair> constrained_mst(std::span<const VertexId> vertices,
                                      std::span<const EdgePair> required, const DistanceFn& dist);

// Connected components of `vertices` under an edge multiset.
std::vector<std::vector<VertexId>> components_of(std::span<const VertexId> vertices,
                                                 const MultiEdgeSet& edges);

// Minimum-cost edge set whose addition joins the given components into one
// (Kruskal over per-pair cheapest connectors). |result| = #components - 1.
std::vector<EdgePair> connect_components(const std::vector<std::vector<VertexId>>& components,
                                         const DistanceFn& dist);

// Closed walk from `start` using every edge exactly as many times as its
// multiplicity (Hierholzer, smallest-neighbor-first). Throws
// InvalidArgumentError naming an odd-degree vertex or a disconnected one.
std::vector<VertexId> euler_tour(const MultiEdgeSet& graph, VertexId start);

// Shortcuts a closed depot walk into alternating customer/connector form,
// keeping the first traversal of each customer with its walk orientation.
// Throws InvalidArgumentError if some customer is never traversed.
RppTour shortcut_to_rpp(std::span<const VertexId> walk, const MetricInstance& inst);

}  // namespace carp
