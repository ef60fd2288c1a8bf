#include "ecg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "ecg/rng.hpp"

namespace ecg {

namespace {

// first `take` slots of a Fisher-Yates pass, enough for sampling without
// replacement
void partial_shuffle(std::vector<std::uint32_t>& pool, std::size_t take, Rng& rng) {
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
}

} // namespace

LabeledGraph ring_of_cliques(std::uint32_t l, std::uint32_t m, std::uint32_t b,
                             std::uint64_t seed) {
    if (l < 3) throw std::invalid_argument("ring needs at least 3 cliques");
    if (m < 2) throw std::invalid_argument("clique size must be at least 2");
    if (b < 1) throw std::invalid_argument("need at least 1 edge between cliques");
    if (static_cast<std::uint64_t>(b) > static_cast<std::uint64_t>(m) * m)
        throw std::invalid_argument("more cross edges requested than distinct pairs");

    const VertexId n = l * m;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(l) * (m * (m - 1) / 2 + b));
    std::vector<std::uint32_t> labels(n);

    for (std::uint32_t i = 0; i < l; ++i) {
        const VertexId base = i * m;
        for (std::uint32_t a = 0; a < m; ++a) {
            labels[base + a] = i;
            for (std::uint32_t c = a + 1; c < m; ++c)
                edges.push_back({base + a, base + c, 1.0});
        }
    }

    Rng rng(RngSeed{seed, 0});
    std::vector<std::uint32_t> pairs(static_cast<std::size_t>(m) * m);
    for (std::uint32_t i = 0; i < l; ++i) {
        const VertexId here = i * m;
        const VertexId next = (i + 1) % l * m;
        if (b == 1) {
            edges.push_back({here + m - 1, next, 1.0});
            continue;
        }
        std::iota(pairs.begin(), pairs.end(), 0);
        partial_shuffle(pairs, b, rng);
        for (std::uint32_t t = 0; t < b; ++t)
            edges.push_back({here + pairs[t] / m, next + pairs[t] % m, 1.0});
    }

    LabeledGraph lg;
    lg.graph = Graph(n, std::move(edges));
    lg.truth = Partition::from_labels(labels);
    return lg;
}

LabeledGraph planted_partition(const std::vector<std::uint32_t>& sizes, double p_in,
                               double p_out, std::uint64_t seed) {
    if (sizes.empty()) throw std::invalid_argument("need at least one block");
    for (std::uint32_t s : sizes)
        if (s == 0) throw std::invalid_argument("block sizes must be positive");
    if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0))
        throw std::invalid_argument("probabilities must lie in [0, 1]");
    if (p_out > p_in)
        throw std::invalid_argument("inter-block probability exceeds intra-block probability");

    std::vector<std::uint32_t> labels;
    for (std::uint32_t block = 0; block < sizes.size(); ++block)
        labels.insert(labels.end(), sizes[block], block);
    const VertexId n = static_cast<VertexId>(labels.size());

    Rng rng(RngSeed{seed, 0});
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            double p = labels[u] == labels[v] ? p_in : p_out;
            if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});
        }
    }

    LabeledGraph lg;
    lg.graph = Graph(n, std::move(edges));
    lg.truth = Partition::from_labels(labels);
    return lg;
}

NullModelGraph degree_preserving_random(const Graph& g, std::uint64_t seed) {
    std::vector<std::uint32_t> stubs;
    stubs.reserve(2 * static_cast<std::size_t>(g.num_edges()));
    for (const Edge& e : g.edges()) {
        stubs.push_back(e.u);
        stubs.push_back(e.v);
    }
    Rng rng(RngSeed{seed, 0});
    rng.shuffle(stubs);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.num_edges() * 2);
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    NullModelGraph out;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        VertexId u = stubs[i];
        VertexId v = stubs[i + 1];
        if (u == v) {
            ++out.dropped_edges;
            continue;
        }
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        if (!seen.insert(key).second) {
            ++out.dropped_edges;
            continue;
        }
        edges.push_back({u, v, 1.0});
    }
    out.graph = Graph(g.num_vertices(), std::move(edges));
    return out;
}

LabeledGraph inject_anomalies(const LabeledGraph& lg, std::uint32_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("need at least one vertex to inject");
    const VertexId n0 = lg.graph.num_vertices();
    if (n0 == 0) throw std::invalid_argument("cannot inject into an empty graph");
    if (lg.truth.size() != n0) throw std::invalid_argument("truth does not match graph");

    Rng rng(RngSeed{seed, 0});
    std::vector<Edge> edges = lg.graph.edges();
    std::vector<std::uint32_t> ids(n0);

    for (std::uint32_t a = 0; a < count; ++a) {
        const VertexId vertex = n0 + a;
        std::size_t d = lg.graph.degree(static_cast<VertexId>(rng.uniform_index(n0)));
        if (d > n0) d = n0; // degrees never exceed n0 - 1, kept as a guard
        std::iota(ids.begin(), ids.end(), 0);
        partial_shuffle(ids, d, rng);
        for (std::size_t t = 0; t < d; ++t) edges.push_back({ids[t], vertex, 1.0});
    }

    std::vector<std::uint32_t> labels(lg.truth.labels());
    labels.reserve(n0 + count);
    for (std::uint32_t a = 0; a < count; ++a) labels.push_back(lg.truth.num_clusters() + a);

    std::vector<std::uint8_t> mask(n0, 0);
    if (lg.anomalies) mask = *lg.anomalies;
    mask.resize(n0 + count, 1);

    LabeledGraph out;
    out.graph = Graph(n0 + count, std::move(edges));
    out.truth = Partition::from_labels(labels);
    out.anomalies = std::move(mask);
    return out;
}

} // namespace ecg
