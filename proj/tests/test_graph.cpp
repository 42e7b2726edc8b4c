#include <catch2/catch_amalgamated.hpp>

#include "spectra/generators.hpp"
#include "spectra/graph.hpp"
#include "spectra/rng.hpp"

using namespace spectra;

TEST_CASE("construction rejects loops and nonpositive data") {
    WeightedDigraph g;
    g.add_vertex("a", 1.0);
    g.add_vertex("b", 2.0);
    CHECK_THROWS_AS(g.add_vertex("c", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex("c", -1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "a", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "b", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "zzz", 1.0), std::invalid_argument);
}

TEST_CASE("parallel edges merge by summing b and raise the flag") {
    WeightedDigraph g;
    g.add_vertex("a", 1.0);
    g.add_vertex("b", 1.0);
    g.add_edge("a", "b", 1.5);
    CHECK_FALSE(g.merged_parallel_edges());
    g.add_edge("a", "b", 2.5);
    CHECK(g.merged_parallel_edges());
    CHECK(g.weight("a", "b") == 4.0);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree identities on random balanced graphs") {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto g = random_balanced(9, 3, seed);
        double total_out = 0.0, total_in = 0.0, total_b = 0.0;
        for (int i = 0; i < g.size(); ++i) {
            auto p = degree_profile(g, g.id(i));
            CHECK(p.beta_total == Catch::Approx(p.beta_plus + p.beta_minus));
            // balanced: beta total is twice the out-degree
            CHECK(p.beta_total == Catch::Approx(2.0 * p.beta_plus));
            total_out += p.beta_plus;
            total_in += p.beta_minus;
        }
        for (const auto& e : g.edges()) total_b += e.b;
        CHECK(total_out == Catch::Approx(total_b));
        CHECK(total_in == Catch::Approx(total_b));
    }
}

TEST_CASE("conservation holds without balance") {
    WeightedDigraph g;
    for (auto v : {"a", "b", "c"}) g.add_vertex(v, 1.0);
    g.add_edge("a", "b", 2.0);
    g.add_edge("b", "c", 5.0);
    g.add_edge("c", "a", 1.0);
    double total_out = 0.0, total_in = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        total_out += g.beta_plus(i);
        total_in += g.beta_minus(i);
    }
    CHECK(total_out == Catch::Approx(8.0));
    CHECK(total_in == Catch::Approx(8.0));
    CHECK_FALSE(validate(g).beta_balanced);
}

TEST_CASE("symmetric weights balance with defect exactly zero") {
    auto g = random_tree(12, 7);  // every edge two-way with equal b
    auto r = validate(g);
    CHECK(r.beta_balanced);
    CHECK(r.worst_defect == 0.0);
}

TEST_CASE("extraction identities") {
    auto g = random_balanced(8, 2, 11);
    std::set<VertexId> all(g.vertex_ids().begin(), g.vertex_ids().end());
    CHECK(induced_subgraph(g, all) == g);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const auto& e : g.edges()) es.emplace_back(e.from, e.to);
    CHECK(partial_graph(g, es) == g);
    CHECK(part_of_graph(g, all, es) == g);
}

TEST_CASE("partial graphs keep isolated vertices") {
    auto g = cycle(4);
    auto h = partial_graph(g, {{"0", "1"}});
    CHECK(h.size() == 4);
    CHECK(h.edge_count() == 1);
    CHECK_THROWS_AS(partial_graph(g, {{"0", "2"}}), std::invalid_argument);
    CHECK_THROWS_AS(partial_graph(g, {{"0", "1"}, {"0", "1"}}), std::invalid_argument);
}

TEST_CASE("validation verdicts on the named families") {
    auto c = cycle(5);
    auto rc = validate(c);
    CHECK(rc.all_pass());
    CHECK(rc.strongly_connected);

    auto s = symmetric_star(4);
    auto rs = validate(s);
    CHECK(rs.all_pass());
    CHECK(rs.strongly_connected);  // two-way edges

    WeightedDigraph sink;  // edge into a dead end: hypothesis fails
    sink.add_vertex("a", 1.0);
    sink.add_vertex("b", 1.0);
    sink.add_edge("a", "b", 1.0);
    auto rk = validate(sink);
    CHECK_FALSE(rk.hypothesis_cnx);
    CHECK_FALSE(rk.all_pass());

    WeightedDigraph two;  // two disjoint 2-cycles: balanced but disconnected
    for (auto v : {"a", "b", "c", "d"}) two.add_vertex(v, 1.0);
    two.add_edge("a", "b", 1.0);
    two.add_edge("b", "a", 1.0);
    two.add_edge("c", "d", 1.0);
    two.add_edge("d", "c", 1.0);
    auto r2 = validate(two);
    CHECK(r2.beta_balanced);
    CHECK_FALSE(r2.connected);
    CHECK_FALSE(r2.strongly_connected);
}

TEST_CASE("boundary sets on the directed 4-cycle") {
    auto g = cycle(4);  // edges 0->1->2->3->0

    SECTION("Omega = {0,1}") {
        auto b = boundary_sets(g, {"0", "1"});
        CHECK(b.interior.empty());
        CHECK(b.vertex_boundary == std::set<VertexId>{"2", "3"});
        std::set<std::pair<VertexId, VertexId>> eb(b.edge_boundary.begin(),
                                                   b.edge_boundary.end());
        CHECK(eb == std::set<std::pair<VertexId, VertexId>>{{"1", "2"}, {"3", "0"}});
    }
    SECTION("Omega = V") {
        auto b = boundary_sets(g, {"0", "1", "2", "3"});
        CHECK(b.interior.size() == 4);
        CHECK(b.vertex_boundary.empty());
        CHECK(b.edge_boundary.empty());
    }
    SECTION("Omega = single vertex") {
        auto b = boundary_sets(g, {"1"});
        CHECK(b.interior.empty());
        auto p = degree_profile(g, "1");
        CHECK(b.vertex_boundary == p.all_neighbors);
        CHECK(b.edge_boundary.size() == 2);  // 0->1 and 1->2
    }
    SECTION("unknown vertex errors") {
        CHECK_THROWS_AS(boundary_sets(g, {"zzz"}), std::invalid_argument);
    }
}

TEST_CASE("boundary set algebra on random subsets") {
    auto g = random_balanced(10, 3, 21);
    auto eng = rng::engine(99);
    for (int t = 0; t < 20; ++t) {
        auto omega = random_vertex_subset(g, eng);
        auto b = boundary_sets(g, omega);
        for (const auto& v : b.interior) CHECK(omega.count(v) == 1);
        for (const auto& v : b.vertex_boundary) CHECK(omega.count(v) == 0);
        CHECK(interior_of(g, omega) == b.interior);
    }
}

TEST_CASE("canonical order is insertion order and ids stay stable") {
    auto g = cycle(3);
    CHECK(g.vertex_ids() == std::vector<VertexId>{"0", "1", "2"});
    auto es = g.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0].from == "0");
    CHECK(es[0].to == "1");
}
