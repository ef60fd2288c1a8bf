#pragma once

#include "ecg/graph.hpp"
#include "ecg/partition.hpp"
#include "ecg/rng.hpp"

namespace ecg {

// Newman-Girvan weighted modularity Q = sum_c [ W_c/W - (S_c/2W)^2 ] with
// W the total edge weight, W_c the intra-cluster weight and S_c the total
// strength of cluster c. Throws on edgeless graphs (Q undefined).
double modularity(const Graph& g, const Partition& p);

// First local-moving phase run to convergence, starting from singletons,
// with a seeded random visiting order refreshed each sweep. No aggregation.
// A move is accepted only if it improves modularity by more than 1e-9;
// among equal-gain targets the lowest cluster label wins.
Partition louvain_level1(const Graph& g, RngSeed seed);

// Full multilevel algorithm: alternate local moving and aggregation until
// a level yields no accepted move, then return the flattened vertex-level
// partition. For a given seed the first phase matches louvain_level1.
Partition louvain_multilevel(const Graph& g, RngSeed seed);

} // namespace ecg
