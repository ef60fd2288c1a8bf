#pragma once

#include <cstdint>
#include <vector>

#include "ecg/ecg.hpp"
#include "ecg/edge_weights.hpp"
#include "ecg/generators.hpp"
#include "ecg/graph.hpp"
#include "ecg/partition.hpp"

namespace ecg {

// Neighbourhood of a seed vertex at increasing weight thresholds. Sizes
// never increase along the threshold axis, and every retained sub-graph
// is connected and contains the seed.
struct DimmerProfile {
    std::vector<double> thresholds;
    std::vector<std::uint32_t> sizes;
    std::vector<Subgraph> subgraphs; // filled only on request
};

// Per-vertex anomaly scores >= 1; degree-0 vertices have no neighbour
// evidence, so they score 1 and are flagged undefined.
struct AnomalyScores {
    std::vector<double> scores;
    std::vector<std::uint8_t> undefined;
};

// Restrict g to the cluster containing the seed vertex, delete the edges
// with weight strictly below theta, return the connected component of the
// seed (with the id remap back to g). theta = 0 keeps the whole cluster;
// theta just above the maximum weight isolates the seed.
Subgraph dimmer(const Graph& g, const EdgeWeightMap& w, const Partition& p,
                VertexId seed_vertex, double theta);

// Evaluates dimmer over `steps` evenly spaced thresholds in [0, 1] plus
// every distinct weight in the seed's cluster and the points just above
// them, so each size change has its exact change point in the list.
DimmerProfile dimmer_profile(const Graph& g, const EdgeWeightMap& w, const Partition& p,
                             VertexId seed_vertex, std::uint32_t steps,
                             bool keep_subgraphs = false);

// Weights of a sub-graph's edges, looked up from the weight map of the
// graph it was extracted from.
EdgeWeightMap subgraph_weights(const Graph& g, const EdgeWeightMap& w, const Subgraph& sub);

// score(v) = (number of neighbours) / (neighbours in the most represented
// community among them). 1 means unanimous neighbourhoods, larger means
// membership spread over many communities.
AnomalyScores cada_scores(const Graph& g, const Partition& p);

// Cluster with the chosen algorithm, score every vertex, and report the
// area under the ROC curve against the anomaly mask.
double cada_pipeline(const LabeledGraph& lg, Algorithm algo, const EcgParams& params,
                     std::size_t workers = 1);

} // namespace ecg
