#pragma once

#include <cstdint>
#include <vector>

#include "ecg/ecg.hpp"
#include "ecg/graph.hpp"
#include "ecg/partition.hpp"

namespace ecg {

struct ComparisonReport {
    double ari = 0.0;
    double agri = 0.0;
    double count_ratio = 0.0;
};

// Adjusted Rand index over all vertex pairs, computed from the exact
// integer contingency table. 1 for identical partitions, expectation 0
// under independence, can go negative. When both partitions are
// all-singletons or both all-in-one the adjustment is 0/0; such pairs
// are identical, so the result is 1.
double ari(const Partition& p, const Partition& q);

// Graph-aware adjusted Rand index, restricted to edge endpoints. With
// a_e, b_e the per-edge co-membership flags under p and q, the raw
// agreement R = mean[a_e == b_e] is adjusted by the independence
// expectation E = p_a*p_b + (1-p_a)(1-p_b): result = (R - E)/(1 - E).
// E = 1 forces R = 1, returned as 1 by convention.
double agri(const Graph& g, const Partition& p, const Partition& q);

// Number of computed clusters over number of true clusters.
double count_ratio(const Partition& found, const Partition& truth);

ComparisonReport compare_partitions(const Graph& g, const Partition& found,
                                    const Partition& truth);

struct PairScore {
    std::uint32_t run_a = 0;
    std::uint32_t run_b = 0;
    double ari = 0.0;
    double agri = 0.0;
};

struct StabilityReport {
    double ari_mean = 0.0;
    double agri_mean = 0.0;
    std::vector<PairScore> per_pair;
};

// Repeats the chosen algorithm `runs` times with independent seeds
// derived from the master seed and reports the mean pairwise ARI and
// AGRI over all run pairs. runs = 2 is the plain run-twice-and-compare
// protocol. params supplies k and w_star for the ecg back-end; its seed
// field is ignored in favour of the derived per-run seeds.
StabilityReport stability(const Graph& g, Algorithm algo, std::uint32_t runs,
                          std::uint64_t master_seed, const EcgParams& params = {},
                          std::size_t workers = 1);

// Probability that a uniformly random positive outranks a uniformly
// random negative, ties counted 1/2 (the Mann-Whitney form of the area
// under the ROC curve). Needs at least one positive and one negative.
double roc_auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels);

} // namespace ecg
