#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pennyrig/graph.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pennyrig;
using namespace testsupport;

TEST_CASE("graph construction canonicalizes vertices and edges") {
    Graph g({"b", "c", "a"}, {{"c", "a"}, {"b", "c"}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.vertices() == std::vector<Vertex>{"a", "b", "c"});
    // Edges come back as sorted index pairs with the smaller index first.
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.index_of("b") == 1);
    CHECK(g.label(2) == "c");
    CHECK(g.neighbors(2) == std::vector<int>{0, 1});
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "z"}}), Error);
    try {
        Graph({"a", "b"}, {{"a", "z"}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
    Graph g({"a"}, {});
    CHECK_THROWS_AS(g.index_of("missing"), Error);
}

TEST_CASE("graph helpers: connectivity, completeness, subgraphs") {
    CHECK(complete_graph(4).is_complete());
    CHECK_FALSE(cycle_graph(4).is_complete());
    CHECK(path_graph(5).is_connected());
    CHECK(Graph({}, {}).is_connected());
    CHECK(Graph({"a"}, {}).is_connected());
    CHECK_FALSE(Graph({"a", "b"}, {}).is_connected());

    Graph c4 = cycle_graph(4);
    Graph p = c4.without_vertex(0);
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2); // removing a cycle vertex leaves a path
    Graph broken = c4.without_edge(0, 1);
    CHECK(broken.edge_count() == 3);
    CHECK_THROWS_AS(c4.without_edge(0, 2), Error);
    Graph chord = c4.with_edge(pad_label(0), pad_label(2));
    CHECK(chord.edge_count() == 5);
}

TEST_CASE("chordality: fixed graphs") {
    struct Case {
        Graph g;
        bool chordal;
    };
    std::vector<Case> cases;
    cases.push_back({complete_graph(4), true});
    cases.push_back({path_graph(5), true});
    cases.push_back({cycle_graph(4), false});
    cases.push_back({cycle_graph(6), false});
    cases.push_back({octahedron_graph(), false});
    cases.push_back({bipyramid_graph(), true});
    cases.push_back({triforce_graph(), true});
    cases.push_back({wheel_graph(6), false});
    cases.push_back({Graph({}, {}), true});
    cases.push_back({Graph({"a"}, {}), true});

    for (const auto& [g, expected] : cases) {
        auto res = is_chordal(g);
        CHECK(res.chordal == expected);
        CHECK(res.order.has_value() == expected);
        if (res.order) {
            CHECK(is_perfect_elimination_order(g, res.order->order));
        }
        if (g.vertex_count() <= 12) {
            CHECK(chordal_by_induced_cycles(g) == expected);
        }
    }
}

TEST_CASE("chordality agrees with the induced-cycle oracle on random graphs") {
    std::mt19937_64 rng(20260822);
    int chordal_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7); // up to 9 vertices
        double p = 0.2 + 0.6 * (static_cast<double>(rng() % 1000) / 1000.0);
        Graph g = random_gnp(n, p, rng);
        bool expected = chordal_by_induced_cycles(g);
        auto res = is_chordal(g);
        REQUIRE(res.chordal == expected);
        if (expected) ++chordal_seen;
    }
    CHECK(chordal_seen > 10); // the sample covers both outcomes
}

TEST_CASE("random chordal generator output is chordal with a valid order") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_chordal(n, 3, rng);
        auto res = is_chordal(g);
        REQUIRE(res.chordal);
        REQUIRE(is_perfect_elimination_order(g, res.order->order));
    }
}

TEST_CASE("perfect elimination order checker rejects bad permutations") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(is_perfect_elimination_order(g, {0, 1}), Error);
    CHECK_THROWS_AS(is_perfect_elimination_order(g, {0, 0, 1}), Error);
    CHECK_THROWS_AS(is_perfect_elimination_order(g, {0, 1, 5}), Error);
    // On C4 every permutation fails the elimination property.
    Graph c4 = cycle_graph(4);
    std::vector<int> order{0, 1, 2, 3};
    bool any = false;
    do {
        any = any || is_perfect_elimination_order(c4, order);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK_FALSE(any);
}

TEST_CASE("clique number: fixed graphs") {
    CHECK(clique_number(Graph({}, {})) == 0);
    CHECK(clique_number(Graph({"a"}, {})) == 1);
    CHECK(clique_number(path_graph(4)) == 2);
    CHECK(clique_number(complete_graph(4)) == 4);
    CHECK(clique_number(octahedron_graph()) == 3);
    CHECK(clique_number(bipyramid_graph()) == 4);
    CHECK(clique_number(triforce_graph()) == 3);
    CHECK(clique_number(wheel_graph(6)) == 3);
    CHECK(clique_number(petersen_graph()) == 2);
}

TEST_CASE("clique number uses a supplied elimination order") {
    Graph g = bipyramid_graph();
    auto res = is_chordal(g);
    REQUIRE(res.chordal);
    CHECK(clique_number(g, res.order) == 4);
}

TEST_CASE("clique number: exact search guard on large non-chordal graphs") {
    Graph c25 = cycle_graph(25);
    CHECK_THROWS_AS(clique_number(c25), Error);
    try {
        clique_number(c25);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InstanceTooLarge);
    }
    CHECK(clique_number(c25, std::nullopt, 30) == 2);
    // Chordal graphs of any size stay fine: the elimination order is used.
    std::mt19937_64 rng(3);
    Graph big = random_chordal(40, 3, rng);
    CHECK_NOTHROW(clique_number(big));
}

TEST_CASE("clique number agrees with the subset oracle on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        double p = 0.2 + 0.6 * (static_cast<double>(rng() % 1000) / 1000.0);
        Graph g = random_gnp(n, p, rng);
        REQUIRE(clique_number(g) == clique_number_by_subsets(g));
    }
}

TEST_CASE("vertex connectivity: fixed graphs") {
    Graph p4 = path_graph(4);
    CHECK(is_k_connected(p4, 1));
    CHECK_FALSE(is_k_connected(p4, 2));

    Graph c6 = cycle_graph(6);
    CHECK(is_k_connected(c6, 2));
    CHECK_FALSE(is_k_connected(c6, 3));

    Graph k4 = complete_graph(4);
    CHECK(is_k_connected(k4, 3)); // complete graphs: k-connected up to n-1
    CHECK_FALSE(is_k_connected(k4, 4));

    Graph k1 = complete_graph(1);
    CHECK(is_k_connected(k1, 0));
    CHECK_FALSE(is_k_connected(k1, 1));

    Graph two = Graph({"a", "b"}, {});
    CHECK(is_k_connected(two, 0));
    CHECK_FALSE(is_k_connected(two, 1));

    CHECK(is_k_connected(octahedron_graph(), 4));
    CHECK_FALSE(is_k_connected(octahedron_graph(), 5));

    CHECK(is_k_connected(petersen_graph(), 3));
    CHECK_FALSE(is_k_connected(petersen_graph(), 4));

    CHECK(is_k_connected(bipyramid_graph(), 3));
    CHECK_FALSE(is_k_connected(bipyramid_graph(), 4));

    CHECK(is_k_connected(wheel_graph(6), 3));
    CHECK_FALSE(is_k_connected(wheel_graph(6), 4));

    // 20 vertices exercises the max-flow strategy through the public entry.
    Graph prism = prism_graph(10);
    CHECK(is_k_connected(prism, 3));
    CHECK_FALSE(is_k_connected(prism, 4));
}

TEST_CASE("connectivity strategies agree on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        double p = 0.2 + 0.7 * (static_cast<double>(rng() % 1000) / 1000.0);
        Graph g = random_gnp(n, p, rng);
        for (int k = 0; k <= 4; ++k) {
            REQUIRE(detail::k_connected_by_cut_enumeration(g, k) ==
                    detail::k_connected_by_max_flow(g, k));
        }
    }
}

TEST_CASE("d-tree recognition: fixed graphs") {
    CHECK(is_d_tree(triforce_graph(), 2));
    CHECK(is_d_tree(complete_graph(3), 2));
    CHECK(is_d_tree(complete_graph(4), 3));
    CHECK_FALSE(is_d_tree(complete_graph(4), 2));
    CHECK_FALSE(is_d_tree(cycle_graph(6), 2));
    CHECK(is_d_tree(path_graph(4), 1)); // 1-trees are exactly the trees
    CHECK_FALSE(is_d_tree(cycle_graph(4), 1));
    CHECK(is_d_tree(bipyramid_graph(), 3));
    CHECK_FALSE(is_d_tree(octahedron_graph(), 3));
    CHECK_FALSE(is_d_tree(complete_graph(2), 2)); // too few vertices
    CHECK_THROWS_AS(is_d_tree(path_graph(3), 0), Error);
}

TEST_CASE("edge count tightness") {
    CHECK(edge_count_tight(triforce_graph(), 2)); // 9 == 2*6 - 3
    CHECK_FALSE(edge_count_tight(complete_graph(4), 2));
    CHECK(edge_count_tight(complete_graph(4), 3));
    CHECK(edge_count_tight(complete_graph(3), 2));
    CHECK(edge_count_tight(path_graph(7), 1));
}

TEST_CASE("random d-trees are recognized and satisfy the classical facts") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        int n = d + 1 + static_cast<int>(rng() % 15);
        Graph g = random_d_tree(n, d, rng);
        REQUIRE(is_d_tree(g, d));
        REQUIRE(edge_count_tight(g, d));
        REQUIRE(is_chordal(g).chordal);
        REQUIRE(clique_number(g) == d + 1);
        REQUIRE(is_k_connected(g, d));
    }
}

TEST_CASE("d-tree recognition is independent of deletion order") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        int n = d + 1 + static_cast<int>(rng() % 12);
        Graph g = random_d_tree(n, d, rng);
        for (int variant = 0; variant < 5; ++variant) {
            std::vector<int> picks;
            for (int i = 0; i < n; ++i) picks.push_back(static_cast<int>(rng() % 97));
            REQUIRE(detail::is_d_tree_with_picker(g, d, picks));
        }
        // Graphs that are not d-trees stay rejected under any order.
        if (g.edge_count() >= 1) {
            auto [u, v] = g.edges().front();
            Graph minus = g.without_edge(u, v);
            std::vector<int> picks{3, 1, 4, 1, 5};
            REQUIRE_FALSE(detail::is_d_tree_with_picker(minus, d, picks));
        }
    }
}
