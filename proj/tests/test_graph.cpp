#include <doctest.h>

#include <random>
#include <sstream>

#include "dbclosure/distance.hpp"
#include "dbclosure/edge_list_io.hpp"
#include "dbclosure/errors.hpp"
#include "dbclosure/graph.hpp"
#include "support/oracle.hpp"

using namespace dbclosure;

namespace {

Graph k_minus_triangles() {
    // K_6 minus triangles {0,1,2} and {3,4,5}
    Graph g = complete_graph(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        g.remove_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("from_edge_list builds simple graphs") {
    const std::vector<Edge> k2{{0, 1}};
    auto g = Graph::from_edge_list(2, k2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));

    const std::vector<Edge> p3{{0, 1}, {1, 0}, {1, 2}};
    g = Graph::from_edge_list(3, p3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK_FALSE(g.has_edge(0, 2));

    const std::vector<Edge> bad{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, bad), IndexOutOfRange);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, loop), SelfLoop);
    CHECK_THROWS_AS(Graph(0), InvalidArgument);
}

TEST_CASE("graphs wider than one word") {
    Graph g = path_graph(130);
    CHECK(g.edge_count() == 129);
    CHECK(g.has_edge(64, 65));
    CHECK(g.degree(127) == 2);
    CHECK(diameter(g) == 129);
    CHECK_THROWS_AS(g.row64(0), InvalidArgument);
}

TEST_CASE("all_pairs_distances") {
    const auto d = all_pairs_distances(path_graph(3));
    CHECK(d(0, 2) == 2);
    CHECK(d(0, 1) == 1);

    const auto k4 = all_pairs_distances(complete_graph(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(k4(u, v) == (u == v ? 0 : 1));

    CHECK(all_pairs_distances(cycle_graph(5)).max_entry() == 2);

    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_THROWS_AS(all_pairs_distances(two), Disconnected);
}

TEST_CASE("diameter") {
    for (int n = 2; n <= 7; ++n)
        CHECK(diameter(complete_graph(n)) == 1);
    CHECK(diameter(path_graph(5)) == 4);

    Graph cocktail = complete_graph(6);
    cocktail.remove_edge(0, 1);
    cocktail.remove_edge(2, 3);
    cocktail.remove_edge(4, 5);
    CHECK(diameter(cocktail) == oracle::fw_diameter(oracle::floyd_warshall(cocktail)));
    CHECK(diameter(cocktail) == 2);
}

TEST_CASE("edge_partition examples") {
    auto p = edge_partition(path_graph(3), 0, 1);
    CHECK(p.closer_to_x == std::vector<int>{0});
    CHECK(p.closer_to_y == std::vector<int>{1, 2});
    CHECK(p.equidistant.empty());

    p = edge_partition(complete_graph(4), 2, 0);
    CHECK(p.closer_to_x == std::vector<int>{2});
    CHECK(p.closer_to_y == std::vector<int>{0});
    CHECK(p.equidistant == std::vector<int>{1, 3});

    p = edge_partition(cycle_graph(4), 0, 1);
    CHECK(p.closer_to_x == std::vector<int>{0, 3});
    CHECK(p.closer_to_y == std::vector<int>{1, 2});
    CHECK(p.equidistant.empty());

    // non-adjacent pairs are allowed
    p = edge_partition(path_graph(5), 0, 2);
    CHECK(p.closer_to_x == std::vector<int>{0});
    CHECK(p.equidistant == std::vector<int>{1});
    CHECK(p.closer_to_y == std::vector<int>{2, 3, 4});

    CHECK_THROWS_AS(edge_partition(path_graph(3), 0, 5), IndexOutOfRange);
}

TEST_CASE("regular_degree") {
    CHECK(regular_degree(cycle_graph(5)) == 2);
    const std::vector<Edge> k13{{0, 1}, {0, 2}, {0, 3}};
    CHECK_FALSE(regular_degree(Graph::from_edge_list(4, k13)).has_value());
    CHECK(regular_degree(k_minus_triangles()) == 3);
}

TEST_CASE("is_spanning_subgraph") {
    Graph c3 = cycle_graph(3);
    Graph p3 = path_graph(3);
    CHECK(is_spanning_subgraph(p3, c3));
    CHECK_FALSE(is_spanning_subgraph(c3, p3));
    CHECK_THROWS_AS(is_spanning_subgraph(p3, complete_graph(4)), SizeMismatch);

    // S(2^2,1) in canonical labels: o=0, x=1..3, y=4 on x1, z=5 on x2.
    const std::vector<Edge> s22{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
    Graph closure = complete_graph(6);
    for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {1, 3}, {0, 4}, {4, 5}, {0, 5}})
        closure.remove_edge(u, v);
    CHECK(is_spanning_subgraph(Graph::from_edge_list(6, s22), closure));
}

TEST_CASE("complement_edges") {
    CHECK(complement_edges(complete_graph(4)).empty());
    CHECK(complement_edges(path_graph(3)) == std::vector<Edge>{{0, 2}});
    const std::vector<Edge> k14{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const auto c = complement_edges(Graph::from_edge_list(5, k14));
    CHECK(c.size() == 6);
    CHECK(std::is_sorted(c.begin(), c.end()));
}

TEST_CASE("property: complement and edges partition all pairs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_connected_graph(rng, n, 0.3);
        auto all = g.edges();
        const auto comp = complement_edges(g);
        CHECK(comp.size() == static_cast<std::size_t>(n * (n - 1) / 2) - g.edge_count());
        all.insert(all.end(), comp.begin(), comp.end());
        std::sort(all.begin(), all.end());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        CHECK(all.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
}

TEST_CASE("property: distance matrix axioms on every connected graph with n <= 6") {
    long checked = 0;
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph &g) {
            if (!is_connected(g))
                return;
            ++checked;
            const auto d = all_pairs_distances(g);
            for (int u = 0; u < n; ++u) {
                if (d(u, u) != 0)
                    FAIL("nonzero diagonal");
                for (int v = 0; v < n; ++v) {
                    if (d(u, v) != d(v, u) || (d(u, v) == 1) != (u != v && g.has_edge(u, v)))
                        FAIL("symmetry or adjacency violated");
                    for (int w = 0; w < n; ++w)
                        if (d(u, w) > d(u, v) + d(v, w))
                            FAIL("triangle inequality violated");
                }
            }
        });
    // connected labelled graphs on 1..6 vertices (OEIS A001187)
    CHECK(checked == 1 + 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("property: partition and neighbourhood rules on random graphs") {
    std::mt19937_64 rng(2024);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 11;
        const double p = 0.05 + 0.9 * (trial % 10) / 9.0;
        const Graph g = oracle::random_connected_graph(rng, n, p);
        const auto d = all_pairs_distances(g);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y)
                    continue;
                const auto part = edge_partition(d, x, y);
                std::vector<int> all;
                all.insert(all.end(), part.closer_to_x.begin(), part.closer_to_x.end());
                all.insert(all.end(), part.closer_to_y.begin(), part.closer_to_y.end());
                all.insert(all.end(), part.equidistant.begin(), part.equidistant.end());
                std::sort(all.begin(), all.end());
                std::vector<int> expect(n);
                std::iota(expect.begin(), expect.end(), 0);
                violations += all != expect;
                for (int u : part.closer_to_x)
                    violations += u != x && g.has_edge(u, y);
                g.for_each_neighbor(y, [&](int u) {
                    const bool in_wyx =
                        std::binary_search(part.closer_to_y.begin(), part.closer_to_y.end(), u);
                    if (!in_wyx && u != x)
                        violations += !g.has_edge(u, x);
                });
            }
    }
    CHECK(violations == 0);
}

TEST_CASE("edge-list text format") {
    std::istringstream in("# a comment\n4\n0 1\n\n1 0\n# another\n1 2\n2 3\n  3 0  \n");
    const Graph g = read_edge_list(in);
    CHECK(g == cycle_graph(4));

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);

    std::istringstream bad1("3\n0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(bad1), ParseError);
    std::istringstream bad2("3\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(bad2), ParseError);
    std::istringstream bad3("3\n0 3\n");
    CHECK_THROWS_AS(read_edge_list(bad3), IndexOutOfRange);
    std::istringstream bad4("# only comments\n");
    CHECK_THROWS_AS(read_edge_list(bad4), ParseError);
    std::istringstream bad5("3\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(bad5), SelfLoop);
}
