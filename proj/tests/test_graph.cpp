#include <sstream>

#include "doctest.h"
#include "ecg/graph.hpp"
#include "ecg/io.hpp"
#include "oracles.hpp"

using namespace ecg;

TEST_SUITE("graph") {

TEST_CASE("construction merges parallel and reversed edges") {
    Graph g(3, {{0, 1, 1.0}, {1, 0, 0.5}, {1, 2, 2.0}, {1, 2, 1.0}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);
    CHECK(g.edge(0).w == doctest::Approx(1.5));
    CHECK(g.edge(1).w == doctest::Approx(3.0));
    CHECK(g.total_weight() == doctest::Approx(4.5));
    CHECK(g.strength(1) == doctest::Approx(4.5));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{1, 1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1, -2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and references the same edge index") {
    Graph g = oracle::random_graph(12, 0.4, 99);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (const AdjEntry& entry : g.neighbors(u)) {
            bool found = false;
            for (const AdjEntry& back : g.neighbors(entry.neighbor))
                if (back.neighbor == u && back.edge == entry.edge) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("edge list loading") {
    SUBCASE("triangle") {
        std::istringstream in("0 1\n1 2\n0 2\n");
        Graph g = load_edge_list(in, Indexing::zero_based, false);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 3);
        CHECK(g.total_weight() == doctest::Approx(3.0));
    }
    SUBCASE("one-based reversed duplicate merges") {
        std::istringstream in("1 2 0.5\n2 1 0.5\n");
        Graph g = load_edge_list(in, Indexing::one_based, true);
        CHECK(g.num_vertices() == 2);
        CHECK(g.num_edges() == 1);
        CHECK(g.edge(0).u == 0);
        CHECK(g.edge(0).v == 1);
        CHECK(g.edge(0).w == doctest::Approx(1.0));
    }
    SUBCASE("comments, blank lines and id gaps") {
        std::istringstream in("# header\n% other comment\n\n0 1\n5 1\n");
        Graph g = load_edge_list(in, Indexing::zero_based, false);
        CHECK(g.num_vertices() == 6);
        CHECK(g.num_edges() == 2);
        CHECK(g.degree(2) == 0);
    }
    SUBCASE("third column ignored when unweighted") {
        std::istringstream in("0 1 7.5\n");
        Graph g = load_edge_list(in, Indexing::zero_based, false);
        CHECK(g.edge(0).w == doctest::Approx(1.0));
    }
    SUBCASE("errors carry line numbers") {
        std::istringstream self_loop("0 1\n2 2\n");
        CHECK_THROWS_WITH_AS(load_edge_list(self_loop, Indexing::zero_based, false),
                             doctest::Contains("line 2"), InputError);
        std::istringstream bad_weight("0 1 -1\n");
        CHECK_THROWS_AS(load_edge_list(bad_weight, Indexing::zero_based, true), InputError);
        std::istringstream malformed("0 x\n");
        CHECK_THROWS_AS(load_edge_list(malformed, Indexing::zero_based, false), InputError);
        std::istringstream too_many("0 1 2 3\n");
        CHECK_THROWS_AS(load_edge_list(too_many, Indexing::zero_based, false), InputError);
        std::istringstream zero_one_based("0 1\n");
        CHECK_THROWS_AS(load_edge_list(zero_one_based, Indexing::one_based, false), InputError);
    }
    SUBCASE("empty input gives the empty graph") {
        std::istringstream in("");
        Graph g = load_edge_list(in, Indexing::zero_based, false);
        CHECK(g.num_vertices() == 0);
        CHECK(g.num_edges() == 0);
    }
}

TEST_CASE("load-write-load round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracle::random_weighted_graph(15, 0.3, seed);
        std::ostringstream out;
        write_edge_list(g, out, true);
        std::istringstream in(out.str());
        Graph back = load_edge_list(in, Indexing::zero_based, true);
        if (g.num_edges() == 0) continue; // vertex count is not recoverable from an empty file
        REQUIRE(back.num_edges() == g.num_edges());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            CHECK(back.edge(e).u == g.edge(e).u);
            CHECK(back.edge(e).v == g.edge(e).v);
            CHECK(back.edge(e).w == doctest::Approx(g.edge(e).w).epsilon(1e-6));
        }
    }
}

TEST_CASE("two-core") {
    SUBCASE("triangle keeps everything") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
        VertexMask core = two_core(g);
        CHECK(core.count == 3);
    }
    SUBCASE("star empties out") {
        std::vector<Edge> edges;
        for (VertexId leaf = 1; leaf <= 5; ++leaf) edges.push_back({0, leaf, 1.0});
        VertexMask core = two_core(Graph(6, std::move(edges)));
        CHECK(core.count == 0);
    }
    SUBCASE("path of six empties out") {
        std::vector<Edge> edges;
        for (VertexId v = 0; v < 5; ++v) edges.push_back({v, v + 1, 1.0});
        VertexMask core = two_core(Graph(6, std::move(edges)));
        CHECK(core.count == 0);
    }
    SUBCASE("triangle with a tail keeps only the triangle") {
        Graph g(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
        VertexMask core = two_core(g);
        CHECK(core.count == 3);
        CHECK(core.contains(0));
        CHECK(core.contains(1));
        CHECK(core.contains(2));
        CHECK(!core.contains(3));
        CHECK(!core.contains(4));
    }
    SUBCASE("matches the peeling reference on random graphs") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Graph g = oracle::random_graph(12, 0.2, seed);
            VertexMask core = two_core(g);
            std::vector<std::uint8_t> expected = oracle::two_core(g);
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                CHECK(core.contains(v) == (expected[v] != 0));
        }
    }
    SUBCASE("is a fixed point") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = oracle::random_graph(14, 0.25, seed);
            VertexMask core = two_core(g);
            // restrict to the core and peel again; nothing should go
            std::vector<Edge> kept;
            std::vector<VertexId> remap(g.num_vertices(), 0);
            VertexId next = 0;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                if (core.contains(v)) remap[v] = next++;
            for (const Edge& e : g.edges())
                if (core.contains(e.u) && core.contains(e.v))
                    kept.push_back({remap[e.u], remap[e.v], e.w});
            VertexMask again = two_core(Graph(next, std::move(kept)));
            CHECK(again.count == core.count);
        }
    }
}

TEST_CASE("connected component extraction") {
    SUBCASE("whole triangle") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
        Subgraph sub = connected_component(g, 0);
        CHECK(sub.graph.num_vertices() == 3);
        CHECK(sub.graph.num_edges() == 3);
        CHECK(sub.orig_ids == std::vector<VertexId>{0, 1, 2});
    }
    SUBCASE("only the seed's triangle of two") {
        Graph g(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
        Subgraph sub = connected_component(g, 4);
        CHECK(sub.graph.num_vertices() == 3);
        CHECK(sub.orig_ids == std::vector<VertexId>{3, 4, 5});
    }
    SUBCASE("edge predicate filters") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
        Subgraph sub = connected_component(g, 0, [&](EdgeId e) { return g.edge(e).v <= 2; });
        CHECK(sub.graph.num_vertices() == 3);
        CHECK(sub.graph.num_edges() == 2);
    }
    SUBCASE("seed out of range") {
        Graph g(2, {{0, 1, 1}});
        CHECK_THROWS_AS(connected_component(g, 7), std::invalid_argument);
    }
    SUBCASE("result is connected and contains the seed") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Graph g = oracle::random_graph(14, 0.15, seed);
            Subgraph sub = connected_component(g, 3);
            bool has_seed = false;
            for (VertexId v : sub.orig_ids)
                if (v == 3) has_seed = true;
            CHECK(has_seed);
            // reachability check inside the result
            std::vector<std::uint8_t> seen(sub.graph.num_vertices(), 0);
            std::vector<VertexId> queue{0};
            seen[0] = 1;
            while (!queue.empty()) {
                VertexId v = queue.back();
                queue.pop_back();
                for (const AdjEntry& entry : sub.graph.neighbors(v))
                    if (!seen[entry.neighbor]) {
                        seen[entry.neighbor] = 1;
                        queue.push_back(entry.neighbor);
                    }
            }
            for (std::uint8_t s : seen) CHECK(s == 1);
        }
    }
}

TEST_CASE("partition and mask files") {
    SUBCASE("partition writer format") {
        Partition p = Partition::from_labels({0, 0, 1});
        std::ostringstream out;
        write_partition(p, out);
        CHECK(out.str() == "0 0\n1 0\n2 1\n");
    }
    SUBCASE("weighted edge writer format") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
        EdgeWeightMap w{{1.0, 1.0, 1.0}, 0.05};
        std::ostringstream out;
        write_weighted_edges(g, w, out);
        CHECK(out.str() == "0 1 1.000000\n0 2 1.000000\n1 2 1.000000\n");
    }
    SUBCASE("empty graph writes an empty edge section") {
        std::ostringstream out;
        write_edge_list(Graph(), out, true);
        CHECK(out.str().empty());
    }
    SUBCASE("partition reader compacts labels and checks coverage") {
        std::istringstream in("0 7\n1 7\n2 9\n");
        Partition p = load_partition(in, Indexing::zero_based);
        CHECK(p.num_clusters() == 2);
        CHECK(p.label(0) == 0);
        CHECK(p.label(2) == 1);

        std::istringstream dup("0 1\n0 2\n1 0\n");
        CHECK_THROWS_AS(load_partition(dup, Indexing::zero_based), InputError);
        std::istringstream gap("0 1\n2 1\n");
        CHECK_THROWS_AS(load_partition(gap, Indexing::zero_based), InputError);
    }
    SUBCASE("one-based partition matches community-file conventions") {
        std::istringstream in("1 1\n2 1\n3 2\n");
        Partition p = load_partition(in, Indexing::one_based);
        CHECK(p.size() == 3);
        CHECK(p.num_clusters() == 2);
    }
    SUBCASE("mask round trip and validation") {
        std::istringstream in("0 1\n1 0\n2 1\n");
        std::vector<std::uint8_t> mask = load_mask(in, Indexing::zero_based);
        CHECK(mask == std::vector<std::uint8_t>{1, 0, 1});
        std::ostringstream out;
        write_mask(mask, out);
        CHECK(out.str() == "0 1\n1 0\n2 1\n");

        std::istringstream bad("0 2\n");
        CHECK_THROWS_AS(load_mask(bad, Indexing::zero_based), InputError);
    }
}

TEST_CASE("dot export") {
    Graph g(3, {{0, 1, 1}, {1, 2, 1}});
    EdgeWeightMap w{{0.8, 0.05}, 0.05};
    std::ostringstream out;
    write_dot(g, w, VertexId{1}, out);
    std::string text = out.str();
    CHECK(text.find("graph ecg {") == 0);
    CHECK(text.find("1 [shape=doublecircle]") != std::string::npos);
    CHECK(text.find("0 -- 1 [weight=0.800000, penwidth=3.200]") != std::string::npos);
    CHECK(text.find("1 -- 2 [weight=0.050000, penwidth=0.200]") != std::string::npos);

    // name table swaps printed ids
    std::vector<VertexId> names{10, 20, 30};
    std::ostringstream renamed;
    write_dot(g, w, VertexId{1}, renamed, &names);
    CHECK(renamed.str().find("20 [shape=doublecircle]") != std::string::npos);
    CHECK(renamed.str().find("10 -- 20") != std::string::npos);
}

TEST_CASE("with_weights keeps topology and replaces weights") {
    Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    Graph h = g.with_weights({0.5, 2.0, 3.5});
    CHECK(h.num_edges() == 3);
    CHECK(h.edge(0).w == doctest::Approx(0.5));
    CHECK(h.total_weight() == doctest::Approx(6.0));
    CHECK_THROWS_AS(g.with_weights({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(g.with_weights({1.0, -1.0, 1.0}), std::invalid_argument);
}

} // TEST_SUITE
