#include "ecg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace ecg {

Graph::Graph(VertexId n, std::vector<Edge> edges) : n_(n) {
    for (Edge& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w > 0.0))
            throw std::invalid_argument("edge weight must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            edges_.back().w += e.w; // merge parallel edges
        else
            edges_.push_back(e);
    }
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    strength_.assign(n_, 0.0);
    total_weight_ = 0.0;
    for (EdgeId i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[e.u].push_back({e.v, i});
        adj_[e.v].push_back({e.u, i});
        strength_[e.u] += e.w;
        strength_[e.v] += e.w;
        total_weight_ += e.w;
    }
}

Graph Graph::with_weights(const std::vector<double>& weights) const {
    if (weights.size() != edges_.size())
        throw std::invalid_argument("weight vector does not match edge count");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw std::invalid_argument("edge weight must be positive");
        edges[i].w = weights[i];
    }
    return Graph(n_, std::move(edges));
}

VertexMask two_core(const Graph& g) {
    const VertexId n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::vector<std::uint8_t> alive(n, 1);
    std::queue<VertexId> peel;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < 2) {
            peel.push(v);
            alive[v] = 0;
        }
    }
    while (!peel.empty()) {
        VertexId v = peel.front();
        peel.pop();
        for (const AdjEntry& a : g.neighbors(v)) {
            if (!alive[a.neighbor]) continue;
            if (--deg[a.neighbor] < 2) {
                alive[a.neighbor] = 0;
                peel.push(a.neighbor);
            }
        }
    }
    VertexMask mask;
    mask.member = std::move(alive);
    mask.count = 0;
    for (VertexId v = 0; v < n; ++v)
        if (mask.member[v]) ++mask.count;
    return mask;
}

Subgraph connected_component(const Graph& g, VertexId seed, const EdgePredicate& allowed) {
    if (seed >= g.num_vertices())
        throw std::invalid_argument("seed vertex out of range");
    std::vector<std::uint8_t> visited(g.num_vertices(), 0);
    std::queue<VertexId> frontier;
    visited[seed] = 1;
    frontier.push(seed);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop();
        for (const AdjEntry& a : g.neighbors(v)) {
            if (visited[a.neighbor] || !allowed(a.edge)) continue;
            visited[a.neighbor] = 1;
            frontier.push(a.neighbor);
        }
    }

    Subgraph out;
    std::vector<VertexId> remap(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!visited[v]) continue;
        remap[v] = static_cast<VertexId>(out.orig_ids.size());
        out.orig_ids.push_back(v);
    }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (visited[ed.u] && visited[ed.v] && allowed(e))
            edges.push_back({remap[ed.u], remap[ed.v], ed.w});
    }
    out.graph = Graph(static_cast<VertexId>(out.orig_ids.size()), std::move(edges));
    return out;
}

Subgraph connected_component(const Graph& g, VertexId seed) {
    return connected_component(g, seed, [](EdgeId) { return true; });
}

} // namespace ecg
