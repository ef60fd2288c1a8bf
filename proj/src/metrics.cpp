#include "ecg/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ecg/parallel.hpp"
#include "ecg/rng.hpp"

namespace ecg {

namespace {

std::uint64_t pairs2(std::uint64_t n) { return n * (n - 1) / 2; }

std::uint64_t sum_pairs(const std::vector<std::size_t>& sizes) {
    std::uint64_t acc = 0;
    for (std::size_t s : sizes) acc += pairs2(s);
    return acc;
}

} // namespace

double ari(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("partition lengths differ");
    const std::size_t n = p.size();
    if (n < 2) return 1.0;

    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(std::max(p.num_clusters(), q.num_clusters()) * 2);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t key = (static_cast<std::uint64_t>(p.label(static_cast<VertexId>(v))) << 32) |
                            q.label(static_cast<VertexId>(v));
        ++cells[key];
    }
    std::uint64_t index = 0;
    for (const auto& [key, count] : cells) index += pairs2(count);
    const std::uint64_t a = sum_pairs(p.cluster_sizes());
    const std::uint64_t b = sum_pairs(q.cluster_sizes());
    const std::uint64_t m = pairs2(n);

    // denominator (a+b)/2 - ab/m vanishes exactly when both partitions
    // are all-singletons or both all-in-one, i.e. p == q
    if ((a == 0 && b == 0) || (a == m && b == m)) return 1.0;

    const long double expected =
        static_cast<long double>(a) * static_cast<long double>(b) / static_cast<long double>(m);
    const long double maximum = (static_cast<long double>(a) + static_cast<long double>(b)) / 2.0L;
    return static_cast<double>((static_cast<long double>(index) - expected) /
                               (maximum - expected));
}

double agri(const Graph& g, const Partition& p, const Partition& q) {
    if (p.size() != g.num_vertices() || q.size() != g.num_vertices())
        throw std::invalid_argument("partition lengths do not match graph");
    if (g.num_edges() == 0)
        throw std::invalid_argument("edge-level agreement undefined on a graph without edges");

    std::uint64_t ca = 0, cb = 0, cagree = 0;
    for (const Edge& e : g.edges()) {
        bool a_e = p.label(e.u) == p.label(e.v);
        bool b_e = q.label(e.u) == q.label(e.v);
        ca += a_e;
        cb += b_e;
        cagree += a_e == b_e;
    }
    const std::uint64_t m = g.num_edges();

    // scaled by m^2 so everything stays integral until the final divide
    const long double expected = static_cast<long double>(ca) * cb +
                                 static_cast<long double>(m - ca) * (m - cb);
    const long double raw = static_cast<long double>(cagree) * m;
    const long double full = static_cast<long double>(m) * m;
    if (expected == full) return 1.0;
    return static_cast<double>((raw - expected) / (full - expected));
}

double count_ratio(const Partition& found, const Partition& truth) {
    if (truth.num_clusters() == 0) throw std::invalid_argument("truth partition has no clusters");
    return static_cast<double>(found.num_clusters()) / static_cast<double>(truth.num_clusters());
}

ComparisonReport compare_partitions(const Graph& g, const Partition& found,
                                    const Partition& truth) {
    ComparisonReport report;
    report.ari = ari(found, truth);
    report.agri = agri(g, found, truth);
    report.count_ratio = count_ratio(found, truth);
    return report;
}

StabilityReport stability(const Graph& g, Algorithm algo, std::uint32_t runs,
                          std::uint64_t master_seed, const EcgParams& params,
                          std::size_t workers) {
    if (runs < 2) throw std::invalid_argument("stability needs at least 2 runs");

    std::vector<Partition> parts(runs);
    parallel_for(runs, workers, [&](std::size_t r) {
        EcgParams run_params = params;
        run_params.seed = mix_seed(master_seed, r);
        parts[r] = run_algorithm(g, algo, run_params);
    });

    StabilityReport report;
    report.per_pair.reserve(static_cast<std::size_t>(runs) * (runs - 1) / 2);
    for (std::uint32_t i = 0; i < runs; ++i) {
        for (std::uint32_t j = i + 1; j < runs; ++j) {
            PairScore score;
            score.run_a = i;
            score.run_b = j;
            score.ari = ari(parts[i], parts[j]);
            score.agri = agri(g, parts[i], parts[j]);
            report.per_pair.push_back(score);
        }
    }
    for (const PairScore& s : report.per_pair) {
        report.ari_mean += s.ari;
        report.agri_mean += s.agri;
    }
    report.ari_mean /= static_cast<double>(report.per_pair.size());
    report.agri_mean /= static_cast<double>(report.per_pair.size());
    return report;
}

double roc_auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels) {
    if (scores.size() != labels.size()) throw std::invalid_argument("score/label lengths differ");
    const std::size_t n = scores.size();
    std::size_t positives = 0;
    for (std::uint8_t l : labels) positives += l != 0;
    if (positives == 0 || positives == n)
        throw std::invalid_argument("ROC needs at least one positive and one negative label");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return scores[x] < scores[y]; });

    // average ranks within tie groups, ranks are 1-based
    long double rank_sum_pos = 0.0L;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        long double avg_rank = (static_cast<long double>(i) + static_cast<long double>(j - 1)) / 2.0L + 1.0L;
        for (std::size_t t = i; t < j; ++t)
            if (labels[order[t]] != 0) rank_sum_pos += avg_rank;
        i = j;
    }
    const long double np = static_cast<long double>(positives);
    const long double nn = static_cast<long double>(n - positives);
    const long double u = rank_sum_pos - np * (np + 1.0L) / 2.0L;
    return static_cast<double>(u / (np * nn));
}

} // namespace ecg
