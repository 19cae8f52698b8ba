#include <doctest.h>

#include <random>

#include "commeval/error.hpp"
#include "commeval/graph.hpp"
#include "commeval/partition.hpp"
#include "test_util.hpp"

using namespace commeval;

TEST_CASE("partition file parsing") {
    const Graph g = Graph::from_edge_list_text("a b\nb c");
    const Partition p = Partition::from_text("a 1\nb 1\nc 2", g);
    CHECK(p.part_count() == 2);
    CHECK(p.part_size(0) == 2);
    CHECK(p.part_size(1) == 1);
    CHECK(p.part_of(*g.index_of("a")) == p.part_of(*g.index_of("b")));
    CHECK(p.part_of(*g.index_of("a")) != p.part_of(*g.index_of("c")));
}

TEST_CASE("partition file parsing rejects bad input") {
    const Graph g = Graph::from_edge_list_text("a b\nb c");
    CHECK_THROWS_WITH_AS(Partition::from_text("a 1\nb 1", g), doctest::Contains("'c'"),
                         ParseError);
    CHECK_THROWS_WITH_AS(Partition::from_text("a 1\na 2\nb 1\nc 1", g),
                         doctest::Contains("duplicate assignment"), ParseError);
    CHECK_THROWS_WITH_AS(Partition::from_text("a 1\nb 1\nc 1\nd 1", g),
                         doctest::Contains("unknown node"), ParseError);
    CHECK_THROWS_AS(Partition::from_text("a\nb 1\nc 1", g), ParseError);
}

TEST_CASE("community indices follow first appearance in the file") {
    const Graph g = Graph::from_edge_list_text("a b\nb c");
    const Partition p = Partition::from_text("b red\nc blue\na red", g);
    CHECK(p.part_of(*g.index_of("b")) == 0);
    CHECK(p.part_of(*g.index_of("a")) == 0);
    CHECK(p.part_of(*g.index_of("c")) == 1);
}

TEST_CASE("compacting constructor drops empty ids") {
    const Partition p({7, 7, 3, 9});
    CHECK(p.part_count() == 3);
    CHECK(p.part_sizes() == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("from_dense validates density") {
    CHECK_THROWS_AS(Partition::from_dense({0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_dense({0, 0}, 2), std::invalid_argument);
    const Partition p = Partition::from_dense({1, 0, 1}, 2);
    CHECK(p.part_size(0) == 1);
    CHECK(p.part_size(1) == 2);
}

TEST_CASE("contingency of identical partitions is diagonal") {
    std::vector<std::size_t> ids(10, 0);
    for (std::size_t u = 6; u < 10; ++u)
        ids[u] = 1;
    const Partition p(ids);
    const ContingencyTable t = contingency(p, p);
    CHECK(t.rows == 2);
    CHECK(t.cols == 2);
    CHECK(t.at(0, 0) == 6);
    CHECK(t.at(1, 1) == 4);
    CHECK(t.at(0, 1) == 0);
    CHECK(t.at(1, 0) == 0);
    CHECK(t.row_sums == p.part_sizes());
}

TEST_CASE("contingency on the canonical fixture") {
    const Partition r = testutil::fig1_reference();
    const Partition a = testutil::fig1_estimate_a();
    const Partition b = testutil::fig1_estimate_b();

    const ContingencyTable ra = contingency(r, a);
    CHECK(ra.at(0, 0) == 5);
    CHECK(ra.at(0, 1) == 1);
    CHECK(ra.at(1, 0) == 0);
    CHECK(ra.at(1, 1) == 4);

    // both estimates produce the same table against the reference
    CHECK(contingency(r, b) == ra);
    CHECK(contingency(a, r) == contingency(b, r));
}

TEST_CASE("contingency of crossing partitions") {
    const Partition x({0, 0, 1, 1});
    const Partition y({0, 1, 0, 1});
    const ContingencyTable t = contingency(x, y);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(t.at(i, j) == 1);
}

TEST_CASE("contingency transpose symmetry") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 2 + testutil::bounded(rng, 30);
        const Partition x = testutil::random_partition(rng, n, 5);
        const Partition y = testutil::random_partition(rng, n, 5);
        const ContingencyTable xy = contingency(x, y);
        const ContingencyTable yx = contingency(y, x);
        REQUIRE(xy.rows == yx.cols);
        REQUIRE(xy.cols == yx.rows);
        for (std::size_t i = 0; i < xy.rows; ++i)
            for (std::size_t j = 0; j < xy.cols; ++j)
                CHECK(xy.at(i, j) == yx.at(j, i));
        CHECK(xy.row_sums == yx.col_sums);
    }
}

TEST_CASE("contingency rejects mismatched node sets") {
    CHECK_THROWS_AS(contingency(Partition({0, 1}), Partition({0, 1, 1})), MeasureError);
}

TEST_CASE("same_grouping ignores label order") {
    CHECK(same_grouping(Partition({0, 0, 1, 2}), Partition({5, 5, 9, 7})));
    CHECK_FALSE(same_grouping(Partition({0, 0, 1}), Partition({0, 1, 1})));
    CHECK_FALSE(same_grouping(Partition({0, 0}), Partition({0, 1})));
}
