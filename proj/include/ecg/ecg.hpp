#pragma once

#include <cstdint>

#include "ecg/edge_weights.hpp"
#include "ecg/graph.hpp"
#include "ecg/louvain.hpp"

namespace ecg {

struct EcgParams {
    std::uint32_t k = 16;    // ensemble size
    double w_star = 0.05;    // minimum edge weight, in (0, 1)
    std::uint64_t seed = 0;  // master seed
};

// How consensus weights and input weights combine for the integration
// pass: replace drops the input weights, multiply scales them.
enum class WeightCombine { replace, multiply };

struct EcgResult {
    Partition partition;
    EdgeWeightMap weights;
    double csi = 0.0;
    EcgParams params;
};

// Consensus weights from k single-level runs with stream seeds 0..k-1.
// An edge whose endpoints both lie in the 2-core gets
//   w_star + (1 - w_star) * (co-occurrence count) / k,
// every other edge gets exactly w_star. Generation runs see the input
// graph's own weights. `workers` caps the threads used for the runs; the
// result does not depend on it.
EdgeWeightMap ecg_weights(const Graph& g, const EcgParams& params, std::size_t workers = 1);

// Full pipeline: consensus weights, then one multilevel run on the
// re-weighted graph using stream seed k (distinct from all generation
// streams). CSI always reflects the raw consensus weights regardless of
// the combine mode.
EcgResult ecg_cluster(const Graph& g, const EcgParams& params,
                      WeightCombine combine = WeightCombine::replace, std::size_t workers = 1);

// Cluster strength index: 1 - (2/|E|) * sum_e min(w_e, 1 - w_e). Close to
// 1 when every weight sits near 0 or 1, close to 0 when weights hover
// around 0.5. Throws on an empty weight map.
double csi(const EdgeWeightMap& w);

// Clustering back-ends selectable from benchmarks and the CLI.
enum class Algorithm { ml, level1, ecg };

// Runs the chosen back-end once. ml and level1 read only params.seed
// (stream 0); ecg uses the full parameter set.
Partition run_algorithm(const Graph& g, Algorithm algo, const EcgParams& params,
                        std::size_t workers = 1);

} // namespace ecg
