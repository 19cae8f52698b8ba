#include <doctest.h>

#include <cmath>
#include <random>

#include "commeval/error.hpp"
#include "commeval/graph.hpp"
#include "commeval/partition.hpp"
#include "test_util.hpp"

using namespace commeval;

TEST_CASE("edge list parsing: smallest path") {
    const Graph g = Graph::from_edge_list_text("a b\nb c");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("edge list parsing: comments, weights, isolated nodes") {
    const Graph g = Graph::from_edge_list_text("a b 2.5\n#x\nc");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.total_weight() == 2.5);
    CHECK(g.degree(*g.index_of("c")) == 0);
    CHECK(g.strength(*g.index_of("c")) == 0.0);
    CHECK(g.strength(*g.index_of("a")) == 2.5);
}

TEST_CASE("edge list parsing rejects malformed input") {
    CHECK_THROWS_WITH_AS(Graph::from_edge_list_text("a b\na b"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list_text("a b\nb a"),
                         doctest::Contains("duplicate edge"), ParseError);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list_text("a a"),
                         doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("a b -1"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("a b 0"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("a b x"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("a b 1 z"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text(""), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("# only a comment\n"), ParseError);
}

TEST_CASE("edge list parsing accepts CRLF and is deterministic") {
    const Graph a = Graph::from_edge_list_text("a b\r\nb c\r\n");
    const Graph b = Graph::from_edge_list_text("a b\nb c\n");
    CHECK(a.node_count() == b.node_count());
    CHECK(a.edge_count() == b.edge_count());
    for (std::size_t u = 0; u < a.node_count(); ++u) {
        CHECK(a.label(u) == b.label(u));
        REQUIRE(a.degree(u) == b.degree(u));
        for (std::size_t i = 0; i < a.degree(u); ++i) {
            CHECK(a.neighbors(u)[i].to == b.neighbors(u)[i].to);
            CHECK(a.neighbors(u)[i].weight == b.neighbors(u)[i].weight);
        }
    }
}

TEST_CASE("degree and strength") {
    const Graph star = testutil::star4();
    CHECK(star.degree(0) == 3);
    CHECK(star.max_degree() == 3);

    const Graph g = Graph::from_edge_list_text("a b 2.5\na c 1.0");
    CHECK(g.strength(*g.index_of("a")) == 3.5);
    CHECK(g.degree(*g.index_of("a")) == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        const Graph g = testutil::random_graph(rng, 2 + testutil::bounded(rng, 40), 0.2);
        std::size_t total = 0;
        for (std::size_t u = 0; u < g.node_count(); ++u)
            total += g.degree(u);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("internal degree") {
    const Graph star = testutil::star4();
    const Partition all_one({0, 0, 0, 0});
    CHECK(internal_degree(star, all_one, 0) == 3);

    const Partition split({0, 0, 0, 1}); // l3 separated
    CHECK(internal_degree(star, split, 0) == 2);

    const Graph g = Graph::from_edge_list_text("a b\nc");
    const Partition p({0, 0, 0});
    CHECK(internal_degree(g, p, *g.index_of("c")) == 0);

    const Partition wrong_size({0, 0});
    CHECK_THROWS_AS(internal_degree(star, wrong_size, 0), MeasureError);
}

TEST_CASE("internal degree is bounded by degree") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 2 + testutil::bounded(rng, 30);
        const Graph g = testutil::random_graph(rng, n, 0.3);
        const Partition p = testutil::random_partition(rng, n, 4);
        for (std::size_t u = 0; u < n; ++u)
            CHECK(internal_degree(g, p, u) <= g.degree(u));
    }
}

TEST_CASE("modularity fixtures") {
    const Graph tri = testutil::two_triangles();

    const Partition all_one({0, 0, 0, 0, 0, 0});
    CHECK(modularity(tri, all_one) == 0.0);

    const Partition correct({0, 0, 0, 1, 1, 1});
    CHECK(modularity(tri, correct) == 0.5);

    const Partition singletons({0, 1, 2, 3, 4, 5});
    CHECK(std::fabs(modularity(tri, singletons) - (-1.0 / 6.0)) <= 1e-12);
}

TEST_CASE("modularity rejects edgeless graphs") {
    const Graph g = Graph::from_edge_list_text("a\nb");
    CHECK_THROWS_AS(modularity(g, Partition({0, 1})), MeasureError);
}

TEST_CASE("modularity is invariant under node and community relabeling") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 10; ++it) {
        const std::size_t n = 4 + testutil::bounded(rng, 20);
        const Graph g = testutil::random_graph(rng, n, 0.4);
        if (g.edge_count() == 0)
            continue;
        const Partition p = testutil::random_partition(rng, n, 4);
        const double q = modularity(g, p);

        // community ids shifted: same grouping, different raw labels
        std::vector<std::size_t> shifted(n);
        for (std::size_t u = 0; u < n; ++u)
            shifted[u] = 10 + (p.part_of(u) + 1) % p.part_count();
        CHECK(std::fabs(modularity(g, Partition(shifted)) - q) <= 1e-12);

        // nodes renamed by reversing the index order
        std::vector<std::string> labels(n);
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u)
            labels[u] = g.label(n - 1 - u);
        for (std::size_t u = 0; u < n; ++u)
            for (const Neighbor& nb : g.neighbors(u))
                if (u < nb.to)
                    edges.push_back({n - 1 - u, n - 1 - nb.to, nb.weight});
        std::vector<std::size_t> reversed(n);
        for (std::size_t u = 0; u < n; ++u)
            reversed[u] = p.part_of(n - 1 - u);
        CHECK(std::fabs(modularity(Graph(std::move(labels), edges), Partition(reversed)) - q) <=
              1e-12);
    }
}

TEST_CASE("modularity is invariant under uniform edge-weight scaling") {
    std::mt19937_64 rng(53);
    const Graph g = testutil::random_graph(rng, 18, 0.3, true);
    const Partition p = testutil::random_partition(rng, 18, 3);
    std::vector<std::string> labels(g.labels());
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < g.node_count(); ++u)
        for (const Neighbor& nb : g.neighbors(u))
            if (u < nb.to)
                edges.push_back({u, nb.to, 4.0 * nb.weight});
    const Graph scaled(std::move(labels), edges);
    CHECK(std::fabs(modularity(g, p) - modularity(scaled, p)) <= 1e-12);
}
