#include "doctest.h"
#include "oracles.hpp"

#include "ecg/graph.hpp"
#include "ecg/louvain.hpp"
#include "ecg/partition.hpp"
#include "ecg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

using namespace ecg;

namespace {

Graph clique(std::uint32_t n) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph(n, edges);
}

Graph two_cliques(std::uint32_t m) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = u + 1; v < m; ++v) {
            edges.push_back({u, v, 1.0});
            edges.push_back({m + u, m + v, 1.0});
        }
    return Graph(2 * m, edges);
}

// l cliques of size m in a ring, one bridge edge between consecutive cliques.
Graph clique_ring(std::uint32_t l, std::uint32_t m) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < l; ++i) {
        std::uint32_t base = i * m;
        for (std::uint32_t u = 0; u < m; ++u)
            for (std::uint32_t v = u + 1; v < m; ++v) edges.push_back({base + u, base + v, 1.0});
        std::uint32_t next = ((i + 1) % l) * m;
        edges.push_back({base + m - 1, next, 1.0});
    }
    return Graph(l * m, edges);
}

Partition clique_partition(std::uint32_t l, std::uint32_t m) {
    std::vector<std::uint32_t> labels(l * m);
    for (std::uint32_t v = 0; v < l * m; ++v) labels[v] = v / m;
    return Partition::from_labels(labels);
}

Partition paired_partition(std::uint32_t l, std::uint32_t m) {
    std::vector<std::uint32_t> labels(l * m);
    for (std::uint32_t v = 0; v < l * m; ++v) labels[v] = (v / m) / 2;
    return Partition::from_labels(labels);
}

} // namespace

TEST_SUITE("louvain") {

TEST_CASE("modularity of a single clique in one cluster is zero") {
    Graph g = clique(5);
    Partition p = Partition::single_cluster(5);
    CHECK(modularity(g, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("modularity of two disjoint cliques split correctly is one half") {
    Graph g = two_cliques(4);
    std::vector<std::uint32_t> labels = {0, 0, 0, 0, 1, 1, 1, 1};
    CHECK(modularity(g, Partition::from_labels(labels)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity rejects edgeless graphs and size mismatches") {
    Graph g(3, {});
    CHECK_THROWS_AS(modularity(g, Partition::single_cluster(3)), std::invalid_argument);

    Graph h(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(modularity(h, Partition::single_cluster(2)), std::invalid_argument);
}

TEST_CASE("modularity matches the dense reference on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = oracle::random_weighted_graph(4 + seed % 9, 0.4, seed);
        if (g.num_edges() == 0) continue;
        Partition p = oracle::random_partition(g.num_vertices(), 4, seed);
        double got = modularity(g, p);
        double want = oracle::modularity(g, p);
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("clique ring modularity follows the closed forms") {
    // With l cliques of size m and one bridge per junction, mu = m(m-1)/2 + 1
    // and W = l*mu.  Per-clique clusters give Q = 1 - 1/mu - 1/l; merging
    // consecutive cliques in pairs (even l) gives Q = 1 - 1/(2mu) - 2/l.
    auto check_ring = [](std::uint32_t l, std::uint32_t m) {
        Graph g = clique_ring(l, m);
        double mu = m * (m - 1) / 2.0 + 1.0;
        double q_single = 1.0 - 1.0 / mu - 1.0 / static_cast<double>(l);
        CHECK(modularity(g, clique_partition(l, m)) ==
              doctest::Approx(q_single).epsilon(1e-12));
        if (l % 2 == 0) {
            double q_pairs = 1.0 - 1.0 / (2.0 * mu) - 2.0 / static_cast<double>(l);
            CHECK(modularity(g, paired_partition(l, m)) ==
                  doctest::Approx(q_pairs).epsilon(1e-12));
        }
    };
    check_ring(30, 5);
    check_ring(10, 3);
    check_ring(8, 2);
}

TEST_CASE("first level phase groups two disjoint triangles exactly") {
    Graph g = two_cliques(3);
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 42ULL, 1234567ULL}) {
        Partition p = louvain_level1(g, RngSeed{seed, 0});
        REQUIRE(p.num_clusters() == 2);
        std::vector<std::uint32_t> want = {0, 0, 0, 1, 1, 1};
        CHECK(p.labels() == want);
    }
}

TEST_CASE("first level phase merges a single edge") {
    Graph g(2, {{0, 1, 1.0}});
    Partition p = louvain_level1(g, RngSeed{3, 0});
    CHECK(p.num_clusters() == 1);
}

TEST_CASE("first level phase recovers clique ring communities for most seeds") {
    Graph g = clique_ring(30, 5);
    int exact = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Partition p = louvain_level1(g, RngSeed{seed, 0});
        if (p.num_clusters() == 30) ++exact;
    }
    // Bridges are weak against the clique interiors, so the first phase
    // should settle on the planted cliques for nearly every visiting order.
    CHECK(exact >= 90);
}

TEST_CASE("multilevel finds the two-triangle optimum") {
    Graph g = two_cliques(3);
    Partition p = louvain_multilevel(g, RngSeed{11, 0});
    CHECK(p.num_clusters() == 2);
    CHECK(modularity(g, p) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("multilevel keeps short clique rings intact and coarsens long ones") {
    // For l = 10, m = 5 the pairwise merge of adjacent cliques lowers Q,
    // so every run must return exactly the 10 planted cliques.
    Graph small = clique_ring(10, 5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Partition p = louvain_multilevel(small, RngSeed{seed, 0});
        CHECK(p.num_clusters() == 10);
    }

    // For l = 30 merging adjacent cliques raises Q, so most runs coarsen.
    Graph big = clique_ring(30, 5);
    int coarsened = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Partition p = louvain_multilevel(big, RngSeed{seed, 0});
        if (p.num_clusters() < 30) ++coarsened;
    }
    CHECK(coarsened >= 15);
}

TEST_CASE("multilevel modularity is at least the first level modularity") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(20 + seed % 20, 0.15, seed);
        if (g.num_edges() == 0) continue;
        Partition lvl1 = louvain_level1(g, RngSeed{seed, 5});
        Partition full = louvain_multilevel(g, RngSeed{seed, 5});
        CHECK(modularity(g, full) >= modularity(g, lvl1) - 1e-12);
    }
}

TEST_CASE("identical graph and seed give identical partitions") {
    Graph g = oracle::random_graph(60, 0.08, 99);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Partition a = louvain_multilevel(g, RngSeed{seed, 2});
        Partition b = louvain_multilevel(g, RngSeed{seed, 2});
        CHECK(a.labels() == b.labels());
        Partition c = louvain_level1(g, RngSeed{seed, 2});
        Partition d = louvain_level1(g, RngSeed{seed, 2});
        CHECK(c.labels() == d.labels());
    }
}

TEST_CASE("modularity is invariant under vertex relabeling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = oracle::random_weighted_graph(15, 0.3, seed);
        if (g.num_edges() == 0) continue;
        std::uint32_t n = g.num_vertices();

        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng(RngSeed{seed, 7});
        rng.shuffle(perm);

        std::vector<Edge> mapped;
        for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            mapped.push_back({perm[ed.u], perm[ed.v], ed.w});
        }
        Graph h(n, mapped);

        Partition p = oracle::random_partition(n, 4, seed);
        std::vector<std::uint32_t> mapped_labels(n);
        for (std::uint32_t v = 0; v < n; ++v) mapped_labels[perm[v]] = p.label(v);

        CHECK(modularity(h, Partition::from_labels(mapped_labels)) ==
              doctest::Approx(modularity(g, p)).epsilon(1e-12));
    }
}

TEST_CASE("first level output is locally optimal for single vertex moves") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = oracle::random_graph(30, 0.12, seed);
        if (g.num_edges() == 0) continue;
        Partition p = louvain_level1(g, RngSeed{seed, 1});
        double base = modularity(g, p);

        std::uint32_t n = g.num_vertices();
        for (std::uint32_t v = 0; v < n; ++v) {
            std::set<std::uint32_t> targets;
            for (const auto& [nbr, e] : g.neighbors(v)) {
                (void)e;
                targets.insert(p.label(nbr));
            }
            for (std::uint32_t c : targets) {
                if (c == p.label(v)) continue;
                std::vector<std::uint32_t> labels = p.labels();
                labels[v] = c;
                CHECK(modularity(g, Partition::from_labels(labels)) <= base + 1e-9);
            }
        }
    }
}

}
