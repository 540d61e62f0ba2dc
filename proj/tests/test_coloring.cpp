#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/coloring.hpp"
#include "amalgam/graph.hpp"
#include "amalgam/mycielski.hpp"
#include "oracles.hpp"

using namespace amalgam;

TEST_CASE("chromatic number of complete graphs") {
    for (int n = 1; n <= 6; ++n) {
        ChromaticResult r = chromatic_number(complete_graph(n));
        CHECK(r.number == n);
        CHECK(verify_coloring(complete_graph(n), r.witness));
        CHECK(r.witness.palette_size == n);
    }
}

TEST_CASE("degenerate cases") {
    ChromaticResult empty = chromatic_number(Graph(0));
    CHECK(empty.number == 0);
    CHECK(empty.witness.colors.empty());
    CHECK(chromatic_number(Graph(1)).number == 1);
    CHECK(chromatic_number(Graph(10)).number == 1);
}

TEST_CASE("C5 needs three colors") {
    Graph c5 = cycle_graph(5);
    // oracle: every 2-coloring fails, some 3-coloring works
    CHECK_FALSE(oracle::brute_k_colorable(c5, 2));
    CHECK(oracle::brute_k_colorable(c5, 3));
    ChromaticResult r = chromatic_number(c5);
    CHECK(r.number == 3);
    CHECK(verify_coloring(c5, r.witness));
}

TEST_CASE("the Grotzsch graph is 4-chromatic") {
    Graph grotzsch = mycielskian(cycle_graph(5)).graph;
    REQUIRE(grotzsch.size() == 11);
    ChromaticResult r = chromatic_number(grotzsch);
    CHECK(r.number == 4);
    CHECK(verify_coloring(grotzsch, r.witness));
    CHECK(clique_number(grotzsch) == 2);
}

TEST_CASE("is_k_colorable examples") {
    CHECK_FALSE(is_k_colorable(complete_graph(3), 2).has_value());
    auto one = is_k_colorable(Graph(10), 1);
    REQUIRE(one.has_value());
    CHECK(one->palette_size == 1);
    // half graphs are bipartite by sides
    Graph h5 = half_graph(5);
    CHECK(oracle::is_bipartite(h5));
    auto two = is_k_colorable(h5, 2);
    REQUIRE(two.has_value());
    CHECK(verify_coloring(h5, *two));
    CHECK(two->palette_size <= 2);
}

TEST_CASE("max clique examples") {
    CHECK(max_clique(complete_graph(4)).members.count() == 4);
    CHECK(max_clique(mycielskian(complete_graph(2)).graph).members.count() == 2);  // C5 is triangle-free
    CHECK(max_clique(disjoint_clique_union({3, 5})).members.count() == 5);
    CHECK(max_clique(Graph(0)).members.count() == 0);
    // witness really is a clique
    Graph g = complete_multipartite({2, 2, 2});
    CliqueWitness w = max_clique(g);
    auto mem = w.members.to_vector();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) CHECK(g.adjacent(mem[i], mem[j]));
}

TEST_CASE("greedy coloring with elimination orders") {
    Graph k3 = complete_graph(3);
    CHECK(greedy_color_with_order(k3, {0, 1, 2}).palette_size == 3);
    CHECK(greedy_color_with_order(k3, {2, 0, 1}).palette_size == 3);
    Graph p4 = path_graph(4);
    CHECK(greedy_color_with_order(p4, {0, 1, 2, 3}).palette_size == 2);
    CHECK_THROWS_AS(greedy_color_with_order(p4, {0, 1, 2}), structural_error);
    CHECK_THROWS_AS(greedy_color_with_order(p4, {0, 1, 2, 2}), structural_error);

    // greedy never exceeds max degree + 1
    Xoshiro256 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = oracle::random_graph(rng.uniform_int(1, 10), 1, 2, rng);
        std::vector<int> order;
        for (int v = 0; v < g.size(); ++v) order.push_back(v);
        rng.shuffle(order);
        Coloring c = greedy_color_with_order(g, order);
        CHECK(verify_coloring(g, c));
        CHECK(c.palette_size <= g.max_degree() + 1);
    }
}

TEST_CASE("verify_coloring") {
    Graph k2 = complete_graph(2);
    Coloring same;
    same.colors = {0, 0};
    same.palette_size = 1;
    CHECK_FALSE(verify_coloring(k2, same));
    Coloring diff;
    diff.colors = {0, 1};
    diff.palette_size = 2;
    CHECK(verify_coloring(k2, diff));
    Coloring partial;
    partial.colors = {0};
    CHECK_THROWS_AS(verify_coloring(k2, partial), structural_error);
    Coloring negative;
    negative.colors = {0, -1};
    CHECK_THROWS_AS(verify_coloring(k2, negative), structural_error);
}

TEST_CASE("solver matches the brute-force oracle on a random corpus") {
    Xoshiro256 rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        int n = rng.uniform_int(1, 8);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        ChromaticResult r = chromatic_number(g);
        CHECK(r.number == oracle::brute_chromatic(g));
        CHECK(verify_coloring(g, r.witness));
        CHECK(max_clique(g).members.count() == static_cast<int>(oracle::brute_max_clique(g).size()));
        // clique lower bound and the chi/chi-1 boundary
        CHECK(max_clique(g).members.count() <= r.number);
        CHECK(is_k_colorable(g, r.number).has_value());
        if (r.number > 0) CHECK_FALSE(is_k_colorable(g, r.number - 1).has_value());
    }
}

TEST_CASE("chromatic number equals the max over small induced subgraphs") {
    Xoshiro256 rng(17);
    for (int rep = 0; rep < 6; ++rep) {
        int n = rng.uniform_int(4, 8);
        Graph g = oracle::random_graph(n, 2, 3, rng);
        int full = chromatic_number(g).number;
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.set(v);
            best = std::max(best, chromatic_number(induced_subgraph(g, s)).number);
        }
        CHECK(best == full);
    }
}

TEST_CASE("vertex partition bounds") {
    Xoshiro256 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(4, 11);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        int chi = chromatic_number(g).number;
        // random partition into up to 3 parts
        int parts = rng.uniform_int(1, 3);
        std::vector<VertexSet> blocks(static_cast<std::size_t>(parts), VertexSet(n));
        for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(rng.uniform_int(0, parts - 1))].set(v);
        int sum = 0, mx = 0, nonempty = 0;
        for (const auto& b : blocks) {
            int c = chromatic_number(induced_subgraph(g, b)).number;
            sum += c;
            mx = std::max(mx, c);
            if (b.count() > 0) ++nonempty;
        }
        (void)nonempty;
        CHECK(chi <= sum);
        CHECK(chi <= parts * mx);
    }
}

TEST_CASE("edge partition product bound") {
    Xoshiro256 rng(57);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(4, 12);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        Graph c0(n), c1(n);
        for (auto [u, v] : g.edges()) {
            if (rng.coin())
                c0.add_edge(u, v);
            else
                c1.add_edge(u, v);
        }
        int chi = chromatic_number(g).number;
        int chi0 = chromatic_number(c0).number;
        int chi1 = chromatic_number(c1).number;
        CHECK(chi <= std::max(1, chi0) * std::max(1, chi1));
    }
}

TEST_CASE("solver colorings are canonical") {
    Graph g = cycle_graph(6);
    ChromaticResult r = chromatic_number(g);
    CHECK(r.witness.colors[0] == 0);
    int seen_max = -1;
    for (int c : r.witness.colors) {
        CHECK(c <= seen_max + 1);
        seen_max = std::max(seen_max, c);
    }
}
