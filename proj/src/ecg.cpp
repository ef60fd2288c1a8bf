#include "ecg/ecg.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ecg/parallel.hpp"

namespace ecg {

namespace {

void validate(const Graph& g, const EcgParams& params) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("consensus weights undefined on a graph without edges");
    if (params.k < 1) throw std::invalid_argument("ensemble size must be at least 1");
    if (!(params.w_star > 0.0 && params.w_star < 1.0))
        throw std::invalid_argument("minimum weight must lie strictly between 0 and 1");
}

} // namespace

EdgeWeightMap ecg_weights(const Graph& g, const EcgParams& params, std::size_t workers) {
    validate(g, params);

    std::vector<Partition> runs(params.k);
    parallel_for(params.k, workers, [&](std::size_t i) {
        runs[i] = louvain_level1(g, RngSeed{params.seed, i});
    });

    // integer co-occurrence counts keep the reduction order-independent
    std::vector<std::uint32_t> counts(g.num_edges(), 0);
    for (const Partition& p : runs) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& edge = g.edge(e);
            if (p.label(edge.u) == p.label(edge.v)) ++counts[e];
        }
    }

    VertexMask core = two_core(g);
    EdgeWeightMap map;
    map.w_star = params.w_star;
    map.values.resize(g.num_edges());
    const double scale = (1.0 - params.w_star) / static_cast<double>(params.k);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        if (core.contains(edge.u) && core.contains(edge.v))
            map.values[e] = params.w_star + scale * static_cast<double>(counts[e]);
        else
            map.values[e] = params.w_star;
    }
    return map;
}

EcgResult ecg_cluster(const Graph& g, const EcgParams& params, WeightCombine combine,
                      std::size_t workers) {
    EcgResult result;
    result.params = params;
    result.weights = ecg_weights(g, params, workers);
    result.csi = csi(result.weights);

    std::vector<double> integration = result.weights.values;
    if (combine == WeightCombine::multiply) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) integration[e] *= g.edge(e).w;
    }
    Graph reweighted = g.with_weights(integration);
    result.partition = louvain_multilevel(reweighted, RngSeed{params.seed, params.k});
    return result;
}

Partition run_algorithm(const Graph& g, Algorithm algo, const EcgParams& params,
                        std::size_t workers) {
    switch (algo) {
        case Algorithm::ml: return louvain_multilevel(g, RngSeed{params.seed, 0});
        case Algorithm::level1: return louvain_level1(g, RngSeed{params.seed, 0});
        case Algorithm::ecg: return ecg_cluster(g, params, WeightCombine::replace, workers).partition;
    }
    throw std::invalid_argument("unknown algorithm");
}

double csi(const EdgeWeightMap& w) {
    if (w.values.empty()) throw std::invalid_argument("cluster strength index of an empty edge set");
    double acc = 0.0;
    for (double v : w.values) acc += std::min(v, 1.0 - v);
    return 1.0 - 2.0 * acc / static_cast<double>(w.values.size());
}

} // namespace ecg
