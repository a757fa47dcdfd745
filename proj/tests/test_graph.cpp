#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llcert/graph.hpp"

#include "support.hpp"

using namespace llcert;
using testsupport::Rng;

TEST_CASE("parse_graph: JSON forms") {
    const Graph k2 = parse_graph(R"({"n": 2, "edges": [[1, 2]]})");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.neighbors(0) == VertexSet::single(1));

    const Graph empty3 = parse_graph(R"({"n": 3, "edges": []})");
    for (int i = 0; i < 3; ++i) CHECK(empty3.neighbors(i).empty());

    // Duplicate edges collapse under set adjacency.
    const Graph p3 = parse_graph(R"({"n": 3, "edges": [[1,2],[2,3],[1,2]]})");
    CHECK(p3.edges().size() == 2);
    CHECK(p3.neighbors(1) == (VertexSet::single(0) | VertexSet::single(2)));
}

TEST_CASE("parse_graph: edge-list form") {
    const Graph g = parse_graph("n 3\n# a comment\n1 2\n\n2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g == parse_graph(R"({"n":3,"edges":[[1,2],[2,3]]})"));
}

TEST_CASE("parse_graph: rejections carry position info") {
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"edges":[[1,2],[2,2]]})"),
                         doctest::Contains("edges[1]"), Error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"edges":[[1,4]]})"),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("n 2\n1 3\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("n 2\n2 2\n"), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("n 2\n1 2 9\n"), doctest::Contains("trailing"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("n 2\nx 2\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_graph("{\"edges\": []}"), Error);
    CHECK_THROWS_AS(parse_graph(""), Error);
    CHECK_THROWS_AS(parse_graph("{\"n\": 99, \"edges\": []}"), Error);
}

TEST_CASE("closed neighborhoods") {
    const Graph k2 = testsupport::complete(2);
    CHECK(k2.closed_neighborhood(0) == VertexSet::full(2));

    const Graph e3 = testsupport::edgeless(3);
    CHECK(e3.closed_neighborhood(1) == VertexSet::single(1));

    const Graph p3 = testsupport::path(3);
    CHECK(p3.closed_neighborhood(1) == VertexSet::full(3));
    CHECK_THROWS_AS(p3.closed_neighborhood(3), Error);

    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testsupport::random_graph(rng, testsupport::pick(rng, 1, 10), 0.4);
        for (int i = 0; i < g.vertex_count(); ++i) {
            CHECK(g.closed_neighborhood(i) == (g.neighbors(i) | VertexSet::single(i)));
            CHECK(g.closed_neighborhood(i).contains(i));
        }
    }
}

TEST_CASE("independence") {
    const Graph k2 = testsupport::complete(2);
    CHECK_FALSE(k2.is_independent(VertexSet::full(2)));
    CHECK(k2.is_independent(VertexSet{}));

    const Graph p3 = testsupport::path(3);
    CHECK(p3.is_independent(VertexSet::single(0) | VertexSet::single(2)));
}

TEST_CASE("independent_subsets: enumeration order and contents") {
    const Graph k2 = testsupport::complete(2);
    const auto k2_sets = k2.independent_subsets(VertexSet::full(2));
    REQUIRE(k2_sets.size() == 3);
    CHECK(k2_sets[0] == VertexSet{});
    CHECK(k2_sets[1] == VertexSet::single(0));
    CHECK(k2_sets[2] == VertexSet::single(1));

    const Graph e2 = testsupport::edgeless(2);
    CHECK(e2.independent_subsets(VertexSet::full(2)).size() == 4);

    const Graph p3 = testsupport::path(3);
    const auto p3_sets = p3.independent_subsets(VertexSet::full(3));
    REQUIRE(p3_sets.size() == 5);
    CHECK(p3_sets.back() == (VertexSet::single(0) | VertexSet::single(2)));
    for (std::size_t i = 1; i < p3_sets.size(); ++i) CHECK(p3_sets[i - 1] < p3_sets[i]);
}

TEST_CASE("independent_subsets agrees with the subset filter on every S") {
    Rng rng(11);
    for (int trial = 0; trial < 11; ++trial) {
        const int n = trial == 0 ? 12 : testsupport::pick(rng, 1, 8);
        const Graph g = testsupport::random_graph(rng, n, 0.5);
        for_each_subset(g.vertices(), [&](VertexSet s) {
            std::size_t direct = 0;
            for_each_subset(s, [&](VertexSet sub) {
                if (g.is_independent(sub)) ++direct;
            });
            CHECK(g.independent_subsets(s).size() == direct);
        });
    }
}

TEST_CASE("induced components") {
    const Graph p3 = testsupport::path(3);
    const auto split = p3.induced_components(VertexSet::single(0) | VertexSet::single(2));
    REQUIRE(split.size() == 2);
    CHECK(split[0] == VertexSet::single(0));
    CHECK(split[1] == VertexSet::single(2));

    CHECK(testsupport::complete(2).induced_components(VertexSet::full(2)).size() == 1);
    CHECK(p3.induced_components(VertexSet::full(3)).size() == 1);
    CHECK(p3.induced_components(VertexSet{}).empty());
}

TEST_CASE("components partition S and localize independence") {
    Rng rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = testsupport::pick(rng, 2, 9);
        const Graph g = testsupport::random_graph(rng, n, 0.35);
        for (int rep = 0; rep < 8; ++rep) {
            const VertexSet s = VertexSet::of_bits(rng() & g.vertices().bits());
            const auto parts = g.induced_components(s);
            VertexSet merged;
            for (VertexSet part : parts) {
                CHECK_FALSE(merged.intersects(part));
                merged = merged | part;
            }
            CHECK(merged == s);

            // No edges between parts: a set is independent iff each trace is.
            const VertexSet probe = VertexSet::of_bits(rng() & s.bits());
            bool split_verdict = true;
            for (VertexSet part : parts)
                if (!g.is_independent(probe & part)) split_verdict = false;
            CHECK(g.is_independent(probe) == split_verdict);
        }
    }
}

TEST_CASE("vertex-set algebra") {
    const VertexSet s = VertexSet::of_bits(0b1011);
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 0);
    CHECK(s.complement_in(5) == VertexSet::of_bits(0b10100));
    CHECK((s - VertexSet::single(1)) == VertexSet::of_bits(0b1001));
    CHECK(set_str(s) == "{1,2,4}");
    CHECK(set_str(VertexSet{}) == "{}");

    std::vector<std::uint64_t> seen;
    for_each_subset(VertexSet::of_bits(0b101), [&](VertexSet sub) { seen.push_back(sub.bits()); });
    CHECK(seen == std::vector<std::uint64_t>{0, 1, 4, 5});
}
