#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ecg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge with endpoints stored u < v.
struct Edge {
    VertexId u;
    VertexId v;
    double w;

    bool operator==(const Edge&) const = default;
};

struct AdjEntry {
    VertexId neighbor;
    EdgeId edge;
};

// Undirected weighted simple graph. Immutable after construction; safe
// for concurrent reads. Edges are kept sorted by (u, v), which fixes the
// edge indexing that weight maps and file output rely on.
class Graph {
  public:
    Graph() = default;

    // Parallel input edges (including reversed duplicates) are merged by
    // summing weights. Self-loops, non-positive weights and out-of-range
    // endpoints are rejected.
    Graph(VertexId n, std::vector<Edge> edges);

    VertexId num_vertices() const { return n_; }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<AdjEntry>& neighbors(VertexId v) const { return adj_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }

    // Weighted degree.
    double strength(VertexId v) const { return strength_[v]; }

    // Sum of all edge weights (the m of modularity formulas, in weight units).
    double total_weight() const { return total_weight_; }

    // Same topology with all edge weights replaced; values must align with
    // edge indices and be strictly positive.
    Graph with_weights(const std::vector<double>& weights) const;

  private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<AdjEntry>> adj_;
    std::vector<double> strength_;
    double total_weight_ = 0.0;

    void build_adjacency();
};

// Per-vertex membership flags.
struct VertexMask {
    std::vector<std::uint8_t> member;
    std::size_t count = 0;

    bool contains(VertexId v) const { return member[v] != 0; }
};

// Induced sub-graph plus the map from its dense vertex ids back to the
// ids of the source graph.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> orig_ids;
};

// Maximal subgraph in which every vertex has degree >= 2, computed on
// topology only by iterative peeling.
VertexMask two_core(const Graph& g);

using EdgePredicate = std::function<bool(EdgeId)>;

// Vertices reachable from seed using only edges passing the predicate;
// the result keeps exactly the passing edges among those vertices.
Subgraph connected_component(const Graph& g, VertexId seed, const EdgePredicate& allowed);
Subgraph connected_component(const Graph& g, VertexId seed);

} // namespace ecg
