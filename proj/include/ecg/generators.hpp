#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/partition.hpp"

namespace ecg {

// Synthetic graph with ground truth attached.
struct LabeledGraph {
    Graph graph;
    Partition truth;
    std::optional<std::vector<std::uint8_t>> anomalies;
};

// l complete cliques of m vertices wired into a ring: between consecutive
// cliques (cyclically) b distinct cross edges are drawn uniformly without
// replacement from the m*m candidate pairs. b = 1 skips the draw and
// connects the last vertex of each clique to the first vertex of the
// next, which keeps every vertex in the 2-core even at m = 2. Truth is
// clique membership. Requires l >= 3, m >= 2, 1 <= b <= m*m.
LabeledGraph ring_of_cliques(std::uint32_t l, std::uint32_t m, std::uint32_t b,
                             std::uint64_t seed);

// Planted-partition model: each intra-block vertex pair becomes an edge
// with probability p_in, each inter-block pair with probability p_out.
// Requires 0 <= p_out <= p_in <= 1 (equality gives Erdos-Renyi) and
// nonempty positive sizes. Isolated vertices are retained; truth is the
// block assignment.
LabeledGraph planted_partition(const std::vector<std::uint32_t>& sizes, double p_in,
                               double p_out, std::uint64_t seed);

struct NullModelGraph {
    Graph graph;
    // stub pairings discarded for being self-loops or repeats; total
    // degree falls short of the input's by exactly twice this count
    std::uint64_t dropped_edges = 0;
};

// Configuration-model rewiring: pair up a shuffled copy of the stub list
// and drop the pairings that would create self-loops or parallel edges.
// All output edges get weight 1.
NullModelGraph degree_preserving_random(const Graph& g, std::uint64_t seed);

// Adds `count` new vertices. Each one copies its degree from a uniformly
// random existing vertex and attaches to that many distinct original
// vertices chosen uniformly, with weight-1 edges. New vertices get
// singleton truth labels and are flagged in the anomalies mask; existing
// flags are carried over.
LabeledGraph inject_anomalies(const LabeledGraph& lg, std::uint32_t count, std::uint64_t seed);

} // namespace ecg
