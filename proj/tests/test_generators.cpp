#include <catch2/catch_amalgamated.hpp>

#include "spectra/generators.hpp"

using namespace spectra;

TEST_CASE("cycle family") {
    auto c3 = cycle(3);
    CHECK(c3.size() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.has_edge("0", "1"));
    CHECK(c3.has_edge("1", "2"));
    CHECK(c3.has_edge("2", "0"));
    CHECK(validate(c3).all_pass());
    CHECK(validate(c3).strongly_connected);

    auto c2 = cycle(2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.has_edge("0", "1"));
    CHECK(c2.has_edge("1", "0"));

    auto c4 = cycle(4, {2.0, 2.0, 2.0, 2.0});
    for (int i = 0; i < 4; ++i) {
        CHECK(c4.beta_plus(i) == 2.0);
        CHECK(c4.beta_minus(i) == 2.0);
    }

    CHECK_THROWS_AS(cycle(1), std::invalid_argument);
    CHECK_THROWS_AS(cycle(4, {1.0, 2.0, 1.0, 1.0}), std::invalid_argument);
    auto skew = cycle(4, {1.0, 2.0, 1.0, 1.0}, {}, /*allow_unbalanced=*/true);
    CHECK_FALSE(validate(skew).beta_balanced);
}

TEST_CASE("symmetric star family") {
    auto s1 = symmetric_star(1);
    CHECK(s1.size() == 2);
    CHECK(s1.edge_count() == 2);

    auto s3 = symmetric_star(3);
    CHECK(s3.size() == 4);
    CHECK(s3.edge_count() == 6);
    CHECK(validate(s3).all_pass());
    for (int i = 1; i <= 3; ++i) {
        CHECK(s3.has_edge("c", std::to_string(i)));
        CHECK(s3.has_edge(std::to_string(i), "c"));
    }
    CHECK_THROWS_AS(symmetric_star(0), std::invalid_argument);
}

TEST_CASE("random trees are symmetric, connected, deterministic") {
    CHECK(random_tree(2, 0).edge_count() == 2);
    auto t = random_tree(5, 42);
    CHECK(t.size() == 5);
    CHECK(t.edge_count() == 8);  // 4 undirected edges
    auto r = validate(t);
    CHECK(r.all_pass());
    CHECK(r.worst_defect == 0.0);
    CHECK(random_tree(5, 42) == t);
    CHECK_FALSE(random_tree(5, 43) == t);
    for (const auto& e : t.edges()) CHECK(t.weight(e.to, e.from) == e.b);
    CHECK_THROWS_AS(random_tree(1, 0), std::invalid_argument);
}

TEST_CASE("random balanced digraphs pass validation across 1000 seeds") {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        int extra = static_cast<int>(seed % 5);
        auto g = random_balanced(n, extra, seed);
        auto r = validate(g);
        if (!r.all_pass() || !r.strongly_connected) {
            CAPTURE(seed, n, extra, r.worst_defect);
            REQUIRE(r.all_pass());
            REQUIRE(r.strongly_connected);
        }
    }
    SUCCEED("1000 seeds validated");
}

TEST_CASE("random balanced special cases") {
    auto ham = random_balanced(6, 0, 9);
    CHECK(ham.edge_count() == 6);  // bare Hamiltonian cycle
    CHECK(random_balanced(6, 4, 31) == random_balanced(6, 4, 31));
    auto g = random_balanced(6, 4, 31);
    double scale = 0.0;
    for (int i = 0; i < g.size(); ++i) scale = std::max(scale, g.beta_plus(i));
    for (int i = 0; i < g.size(); ++i)
        CHECK(std::abs(g.beta_plus(i) - g.beta_minus(i)) <= 1e-12 * std::max(1.0, scale));
}

TEST_CASE("flower composition") {
    SECTION("triangle core with one symmetric-edge petal") {
        auto core = cycle(3);
        WeightedDigraph petal;
        petal.add_vertex("p", 1.0);
        petal.add_vertex("tip", 1.0);
        petal.add_edge("p", "tip", 1.0);
        petal.add_edge("tip", "p", 1.0);
        auto f = flower_compose(core, {{petal, "0", "p"}});
        CHECK(f.graph.size() == 4);
        CHECK(f.core == std::set<VertexId>{"0", "1", "2"});
        REQUIRE(f.petals.size() == 1);
        CHECK(f.petals[0].vertices == std::set<VertexId>{"0", "tip"});
        CHECK(verify_flower(f).all_pass());
        // removing petal interiors recovers the core exactly
        CHECK(induced_subgraph(f.graph, f.core) == core);
    }
    SECTION("empty petal list is the identity") {
        auto core = random_balanced(5, 2, 8);
        auto f = flower_compose(core, {});
        CHECK(f.graph == core);
        CHECK(f.petals.empty());
        CHECK(verify_flower(f).all_pass());
    }
    SECTION("two triangle petals on distinct leaves of a path") {
        auto core = symmetric_star(2);  // path 1 - c - 2
        auto p1 = with_prefix(cycle(3), "u");
        auto p2 = with_prefix(cycle(3), "v");
        auto f = flower_compose(core, {{p1, "1", "u0"}, {p2, "2", "v0"}});
        CHECK(f.graph.size() == 7);
        CHECK(verify_flower(f).all_pass());
        CHECK(induced_subgraph(f.graph, f.core) == core);
    }
    SECTION("same attach vertex twice is rejected") {
        auto core = cycle(3);
        auto p1 = with_prefix(cycle(3), "u");
        auto p2 = with_prefix(cycle(3), "v");
        CHECK_THROWS_AS(flower_compose(core, {{p1, "0", "u0"}, {p2, "0", "v0"}}),
                        std::invalid_argument);
    }
    SECTION("petal overlapping the core beyond the attach vertex is rejected") {
        auto core = cycle(3);
        auto clash = cycle(3);  // shares ids 0,1,2 with the core
        CHECK_THROWS_AS(flower_compose(core, {{clash, "0", "0"}}), std::invalid_argument);
    }
    SECTION("glued vertex takes the core measure") {
        WeightedDigraph core;
        core.add_vertex("a", 5.0);
        core.add_vertex("b", 1.0);
        core.add_edge("a", "b", 1.0);
        core.add_edge("b", "a", 1.0);
        WeightedDigraph petal;
        petal.add_vertex("x", 0.25);
        petal.add_vertex("y", 1.0);
        petal.add_edge("x", "y", 1.0);
        petal.add_edge("y", "x", 1.0);
        auto f = flower_compose(core, {{petal, "a", "x"}});
        CHECK(f.graph.measure_of("a") == 5.0);
    }
}

TEST_CASE("with_prefix renames every vertex consistently") {
    auto g = random_balanced(6, 2, 17);
    auto h = with_prefix(g, "z_");
    CHECK(h.size() == g.size());
    CHECK(h.edge_count() == g.edge_count());
    for (int i = 0; i < g.size(); ++i) {
        CHECK(h.id(i) == "z_" + g.id(i));
        CHECK(h.measure(i) == g.measure(i));
    }
}
