#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "builders.hpp"
#include "domratio/enumeration.hpp"
#include "domratio/graph.hpp"

using namespace domratio;
using testsupport::complete_graph;
using testsupport::path_graph;
using testsupport::star_graph;

TEST_CASE("from_edges validates and canonicalizes") {
    Graph p4 = path_graph(4);
    CHECK(p4.n() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.neighbors(1) == std::vector<int>{0, 2});
    CHECK(p4.degree(1) == 2);
    CHECK(p4.max_degree() == 2);
    CHECK(p4.has_edge(2, 3));
    CHECK_FALSE(p4.has_edge(0, 2));

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("vertex sets") {
    Graph p4 = path_graph(4);
    VertexSet s(4, {2, 0, 2});
    CHECK(s.size() == 2);
    CHECK(s.contains(0));
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    s.add(3);
    CHECK(s.values() == std::vector<int>{0, 2, 3});
    CHECK_THROWS_AS(s.add(4), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet(2, {5}), std::invalid_argument);

    VertexSet t(4, {1});
    CHECK(s.union_with(t).values() == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(s.union_with(VertexSet(5)), std::invalid_argument);

    CHECK(VertexSet(4, {1}).closed_neighborhood(p4).values() == std::vector<int>{0, 1, 2});
    CHECK(VertexSet(4, {0}).closed_neighborhood(p4).values() == std::vector<int>{0, 1});
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("n 2\n0 1") == Graph::from_edges(2, {{0, 1}}));
    CHECK(parse_edge_list("n 4\n0 1\n1 2\n2 3") == path_graph(4));

    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 1\n0 1"),
                         "edge list, line 3: duplicate edge", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 1\n1 0"),
                         "edge list, line 3: duplicate edge", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n1 1"), "edge list, line 2: self-loop",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 7"),
                         "edge list, line 2: vertex index out of range", std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("m 3\n0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 junk"), std::invalid_argument);
}

TEST_CASE("forest classification") {
    auto p4 = classify_forest(path_graph(4));
    CHECK(p4.is_tree);
    CHECK(p4.is_forest);
    CHECK(p4.components.size() == 1);

    auto two_edges = classify_forest(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(two_edges.is_forest);
    CHECK_FALSE(two_edges.is_tree);
    REQUIRE(two_edges.components.size() == 2);
    CHECK(two_edges.components[0].values() == std::vector<int>{0, 1});
    CHECK(two_edges.components[1].values() == std::vector<int>{2, 3});

    CHECK_FALSE(classify_forest(complete_graph(3)).is_forest);
}

TEST_CASE("balanced double star generator") {
    CHECK_THROWS_AS(balanced_double_star(0), std::invalid_argument);
    CHECK_THROWS_AS(balanced_double_star(-2), std::invalid_argument);

    // s = 1 is the path on four vertices up to labels.
    Graph s1 = balanced_double_star(1);
    CHECK(s1.n() == 4);
    CHECK(classify_forest(s1).is_tree);
    std::vector<int> degs = s1.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2, 2});

    Graph s3 = balanced_double_star(3);
    CHECK(s3.n() == 8);
    CHECK(classify_forest(s3).is_tree);
    degs = s3.degrees();
    CHECK(std::count(degs.begin(), degs.end(), 4) == 2);
    CHECK(std::count(degs.begin(), degs.end(), 1) == 6);

    for (int s = 1; s <= 12; ++s) {
        Graph g = balanced_double_star(s);
        CHECK(g.n() == 2 * s + 2);
        CHECK(g.max_degree() == s + 1);
        CHECK(classify_forest(g).is_tree);
        CHECK(is_balanced_double_star(g));
    }
}

TEST_CASE("balanced double star recognition") {
    CHECK(is_balanced_double_star(path_graph(4)));
    CHECK_FALSE(is_balanced_double_star(path_graph(5)));
    CHECK_FALSE(is_balanced_double_star(star_graph(3)));
    CHECK_FALSE(is_balanced_double_star(Graph::from_edges(2, {{0, 1}})));
    // Unbalanced double star: center degrees 2 and 3.
    CHECK_FALSE(is_balanced_double_star(
        Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}})));
    CHECK_FALSE(is_balanced_double_star(complete_graph(3)));
}

TEST_CASE("line graphs") {
    CHECK(line_graph(Graph::from_edges(2, {{0, 1}})).graph == Graph::from_edges(1, {}));
    CHECK(line_graph(path_graph(4)).graph == path_graph(3));
    CHECK(line_graph(star_graph(3)).graph == complete_graph(3));

    auto lp4 = line_graph(path_graph(4));
    CHECK(lp4.vertex_to_edge ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK_THROWS_AS(line_graph(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);

    // |E(L(T))| = sum over v of C(d(v), 2) for all trees up to n = 12.
    for (int n = 2; n <= 12; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            long long expected = 0;
            for (int v = 0; v < t.n(); ++v) {
                long long d = t.degree(v);
                expected += d * (d - 1) / 2;
            }
            CHECK(line_graph(t).graph.edge_count() == expected);
        });
    }
}

TEST_CASE("induced subgraphs keep a map to the parent") {
    Graph p4 = path_graph(4);
    auto sub = induced_subgraph(p4, VertexSet(4, {0, 2, 3}));
    CHECK(sub.graph == Graph::from_edges(3, {{1, 2}}));
    CHECK(sub.to_parent == std::vector<int>{0, 2, 3});
}

TEST_CASE("disjoint union") {
    Graph g = disjoint_union(path_graph(2), path_graph(3));
    CHECK(g.n() == 5);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {3, 4}});
}
