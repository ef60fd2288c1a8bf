#include "ecg/applications.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecg/metrics.hpp"

namespace ecg {

namespace {

void check_inputs(const Graph& g, const EdgeWeightMap& w, const Partition& p,
                  VertexId seed_vertex) {
    if (seed_vertex >= g.num_vertices()) throw std::invalid_argument("seed vertex out of range");
    if (w.values.size() != g.num_edges())
        throw std::invalid_argument("weight map does not match graph");
    if (p.size() != g.num_vertices())
        throw std::invalid_argument("partition does not match graph");
}

} // namespace

Subgraph dimmer(const Graph& g, const EdgeWeightMap& w, const Partition& p,
                VertexId seed_vertex, double theta) {
    check_inputs(g, w, p, seed_vertex);
    const std::uint32_t home = p.label(seed_vertex);
    return connected_component(g, seed_vertex, [&](EdgeId e) {
        const Edge& edge = g.edge(e);
        return p.label(edge.u) == home && p.label(edge.v) == home && w.values[e] >= theta;
    });
}

DimmerProfile dimmer_profile(const Graph& g, const EdgeWeightMap& w, const Partition& p,
                             VertexId seed_vertex, std::uint32_t steps, bool keep_subgraphs) {
    check_inputs(g, w, p, seed_vertex);
    if (steps < 2) throw std::invalid_argument("profile needs at least 2 steps");

    std::vector<double> thresholds;
    thresholds.reserve(steps);
    for (std::uint32_t i = 0; i < steps; ++i)
        thresholds.push_back(static_cast<double>(i) / (steps - 1));

    // change points: deletion uses strict <, so the size drop for weight
    // value x happens just above x, not at it
    const std::uint32_t home = p.label(seed_vertex);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        if (p.label(edge.u) != home || p.label(edge.v) != home) continue;
        thresholds.push_back(w.values[e]);
        thresholds.push_back(std::nextafter(w.values[e], 2.0));
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    DimmerProfile profile;
    profile.thresholds = std::move(thresholds);
    profile.sizes.reserve(profile.thresholds.size());
    for (double theta : profile.thresholds) {
        Subgraph sub = dimmer(g, w, p, seed_vertex, theta);
        profile.sizes.push_back(sub.graph.num_vertices());
        if (keep_subgraphs) profile.subgraphs.push_back(std::move(sub));
    }
    return profile;
}

EdgeWeightMap subgraph_weights(const Graph& g, const EdgeWeightMap& w, const Subgraph& sub) {
    if (w.values.size() != g.num_edges())
        throw std::invalid_argument("weight map does not match graph");
    EdgeWeightMap out;
    out.w_star = w.w_star;
    out.values.reserve(sub.graph.num_edges());
    for (const Edge& e : sub.graph.edges()) {
        VertexId a = sub.orig_ids[e.u];
        VertexId b = sub.orig_ids[e.v];
        double value = 0.0;
        bool found = false;
        for (const AdjEntry& entry : g.neighbors(a)) {
            if (entry.neighbor == b) {
                value = w.values[entry.edge];
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("sub-graph edge missing from source graph");
        out.values.push_back(value);
    }
    return out;
}

AnomalyScores cada_scores(const Graph& g, const Partition& p) {
    if (p.size() != g.num_vertices())
        throw std::invalid_argument("partition does not match graph");

    AnomalyScores out;
    out.scores.assign(g.num_vertices(), 1.0);
    out.undefined.assign(g.num_vertices(), 0);

    std::vector<std::uint32_t> block_count(p.num_clusters(), 0);
    std::vector<std::uint32_t> touched;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& adj = g.neighbors(v);
        if (adj.empty()) {
            out.undefined[v] = 1;
            continue;
        }
        touched.clear();
        std::uint32_t best = 0;
        for (const AdjEntry& entry : adj) {
            std::uint32_t c = p.label(entry.neighbor);
            if (block_count[c] == 0) touched.push_back(c);
            best = std::max(best, ++block_count[c]);
        }
        out.scores[v] = static_cast<double>(adj.size()) / static_cast<double>(best);
        for (std::uint32_t c : touched) block_count[c] = 0;
    }
    return out;
}

double cada_pipeline(const LabeledGraph& lg, Algorithm algo, const EcgParams& params,
                     std::size_t workers) {
    if (!lg.anomalies) throw std::invalid_argument("anomaly mask missing");
    Partition p = run_algorithm(lg.graph, algo, params, workers);
    AnomalyScores scores = cada_scores(lg.graph, p);
    return roc_auc(scores.scores, *lg.anomalies);
}

} // namespace ecg
