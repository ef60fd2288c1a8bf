#include "ecg/louvain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ecg {

namespace {

constexpr double kMoveTol = 1e-9;

// Aggregation-friendly working representation: CSR adjacency without
// self entries, self-loop weight kept per vertex. Strength counts a
// self-loop twice; total counts it once.
struct WorkGraph {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> nbr;
    std::vector<double> wgt;
    std::vector<double> self_loop;
    std::vector<double> strength;
    double total = 0.0;

    std::size_t size() const { return self_loop.size(); }
};

WorkGraph from_graph(const Graph& g) {
    WorkGraph wg;
    const std::size_t n = g.num_vertices();
    wg.self_loop.assign(n, 0.0);
    wg.strength.assign(n, 0.0);
    wg.offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) wg.offsets[v + 1] = wg.offsets[v] + g.degree(static_cast<VertexId>(v));
    wg.nbr.resize(wg.offsets[n]);
    wg.wgt.resize(wg.offsets[n]);
    std::vector<std::size_t> cursor(wg.offsets.begin(), wg.offsets.end() - 1);
    for (const Edge& e : g.edges()) {
        wg.nbr[cursor[e.u]] = e.v;
        wg.wgt[cursor[e.u]++] = e.w;
        wg.nbr[cursor[e.v]] = e.u;
        wg.wgt[cursor[e.v]++] = e.w;
    }
    for (std::size_t v = 0; v < n; ++v) wg.strength[v] = g.strength(static_cast<VertexId>(v));
    wg.total = g.total_weight();
    return wg;
}

// Local moving to convergence; labels start as singletons and end dense
// enough for compaction by the caller. Returns the number of accepted moves.
std::size_t local_moving(const WorkGraph& wg, std::vector<std::uint32_t>& labels, Rng& rng) {
    const std::size_t n = wg.size();
    const double w_total = wg.total;
    const double inv_w = 1.0 / w_total;
    const double inv_2w2 = 1.0 / (2.0 * w_total * w_total);

    std::vector<double> comm_tot(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) comm_tot[labels[v]] += wg.strength[v];

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> k_to(n, 0.0);
    std::vector<std::uint32_t> touched;
    touched.reserve(64);

    std::size_t total_moves = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        rng.shuffle(order);
        for (std::uint32_t u : order) {
            const std::uint32_t home = labels[u];
            touched.clear();
            for (std::size_t i = wg.offsets[u]; i < wg.offsets[u + 1]; ++i) {
                std::uint32_t c = labels[wg.nbr[i]];
                if (k_to[c] == 0.0) touched.push_back(c);
                k_to[c] += wg.wgt[i];
            }
            const double s_u = wg.strength[u];
            comm_tot[home] -= s_u;

            const double gain_home = k_to[home] * inv_w - comm_tot[home] * s_u * inv_2w2;
            double best_gain = gain_home;
            std::uint32_t best = home;
            for (std::uint32_t c : touched) {
                if (c == home) continue;
                double gain = k_to[c] * inv_w - comm_tot[c] * s_u * inv_2w2;
                if (gain > best_gain || (gain == best_gain && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }
            if (best != home && best_gain - gain_home > kMoveTol) {
                labels[u] = best;
                comm_tot[best] += s_u;
                moved = true;
                ++total_moves;
            } else {
                comm_tot[home] += s_u;
            }
            for (std::uint32_t c : touched) k_to[c] = 0.0;
            k_to[home] = 0.0;
        }
    }
    return total_moves;
}

std::uint32_t compact_labels(std::vector<std::uint32_t>& labels) {
    std::vector<std::uint32_t> remap(labels.size(), 0xffffffffu);
    std::uint32_t next = 0;
    for (std::uint32_t& l : labels) {
        if (remap[l] == 0xffffffffu) remap[l] = next++;
        l = remap[l];
    }
    return next;
}

WorkGraph aggregate(const WorkGraph& wg, const std::vector<std::uint32_t>& labels,
                    std::uint32_t num_clusters) {
    WorkGraph out;
    out.self_loop.assign(num_clusters, 0.0);
    out.strength.assign(num_clusters, 0.0);
    for (std::size_t v = 0; v < wg.size(); ++v) out.self_loop[labels[v]] += wg.self_loop[v];

    // cross-cluster weights keyed (min, max); std::map keeps the CSR
    // construction order deterministic
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> cross;
    for (std::size_t v = 0; v < wg.size(); ++v) {
        std::uint32_t cv = labels[v];
        for (std::size_t i = wg.offsets[v]; i < wg.offsets[v + 1]; ++i) {
            std::uint32_t u = wg.nbr[i];
            if (u < v) continue; // each undirected pair once
            std::uint32_t cu = labels[u];
            if (cu == cv)
                out.self_loop[cv] += wg.wgt[i];
            else
                cross[{std::min(cv, cu), std::max(cv, cu)}] += wg.wgt[i];
        }
    }

    std::vector<std::size_t> deg(num_clusters, 0);
    for (const auto& [key, w] : cross) {
        ++deg[key.first];
        ++deg[key.second];
    }
    out.offsets.assign(num_clusters + 1, 0);
    for (std::uint32_t c = 0; c < num_clusters; ++c) out.offsets[c + 1] = out.offsets[c] + deg[c];
    out.nbr.resize(out.offsets[num_clusters]);
    out.wgt.resize(out.offsets[num_clusters]);
    std::vector<std::size_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
    for (const auto& [key, w] : cross) {
        out.nbr[cursor[key.first]] = key.second;
        out.wgt[cursor[key.first]++] = w;
        out.nbr[cursor[key.second]] = key.first;
        out.wgt[cursor[key.second]++] = w;
    }

    out.total = 0.0;
    for (std::uint32_t c = 0; c < num_clusters; ++c) {
        double s = 2.0 * out.self_loop[c];
        for (std::size_t i = out.offsets[c]; i < out.offsets[c + 1]; ++i) s += out.wgt[i];
        out.strength[c] = s;
        out.total += out.self_loop[c];
    }
    for (const auto& [key, w] : cross) out.total += w;
    return out;
}

void require_edges(const Graph& g) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("operation undefined on a graph without edges");
}

} // namespace

double modularity(const Graph& g, const Partition& p) {
    require_edges(g);
    if (p.size() != g.num_vertices())
        throw std::invalid_argument("partition does not match graph");
    const double w_total = g.total_weight();
    std::vector<double> intra(p.num_clusters(), 0.0);
    std::vector<double> tot(p.num_clusters(), 0.0);
    for (const Edge& e : g.edges())
        if (p.label(e.u) == p.label(e.v)) intra[p.label(e.u)] += e.w;
    for (VertexId v = 0; v < g.num_vertices(); ++v) tot[p.label(v)] += g.strength(v);
    double q = 0.0;
    for (std::uint32_t c = 0; c < p.num_clusters(); ++c) {
        double frac = tot[c] / (2.0 * w_total);
        q += intra[c] / w_total - frac * frac;
    }
    return q;
}

Partition louvain_level1(const Graph& g, RngSeed seed) {
    if (g.num_vertices() == 0) throw std::invalid_argument("empty graph");
    require_edges(g);
    Rng rng(seed);
    WorkGraph wg = from_graph(g);
    std::vector<std::uint32_t> labels(wg.size());
    std::iota(labels.begin(), labels.end(), 0);
    local_moving(wg, labels, rng);
    return Partition::from_labels(labels);
}

Partition louvain_multilevel(const Graph& g, RngSeed seed) {
    if (g.num_vertices() == 0) throw std::invalid_argument("empty graph");
    require_edges(g);
    Rng rng(seed);
    WorkGraph wg = from_graph(g);
    std::vector<std::uint32_t> vertex_labels(g.num_vertices());
    std::iota(vertex_labels.begin(), vertex_labels.end(), 0);
    bool first_level = true;
    for (;;) {
        std::vector<std::uint32_t> labels(wg.size());
        std::iota(labels.begin(), labels.end(), 0);
        std::size_t moves = local_moving(wg, labels, rng);
        std::uint32_t num_clusters = compact_labels(labels);
        if (first_level) {
            vertex_labels = labels;
            first_level = false;
        } else {
            for (std::uint32_t& l : vertex_labels) l = labels[l];
        }
        if (moves == 0 || num_clusters == wg.size()) break;
        wg = aggregate(wg, labels, num_clusters);
    }
    return Partition::from_labels(vertex_labels);
}

} // namespace ecg
