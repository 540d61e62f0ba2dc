#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/coloring.hpp"
#include "amalgam/mycielski.hpp"
#include "oracles.hpp"

using namespace amalgam;

namespace {

// Direct adjacency formula used as a cross-check of the amalgamation route.
Graph mycielski_by_formula(const Graph& a) {
    int n = a.size();
    Graph m(2 * n + 1);
    for (auto [u, v] : a.edges()) {
        m.add_edge(u, v);
        m.add_edge(n + u, v);
        m.add_edge(u, n + v);
    }
    for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
    return m;
}

}  // namespace

TEST_CASE("mycielskian of a single vertex") {
    // the sibling copies an empty neighborhood, so the only edge is sibling-apex
    auto r = mycielskian(Graph(1));
    CHECK(r.graph.size() == 3);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.apex == 2);
    CHECK(r.graph.adjacent(1, 2));
    CHECK(chromatic_number(r.graph).number == 2);  // chi(K_1) + 1
}

TEST_CASE("mycielskian of an edge is the 5-cycle") {
    auto r = mycielskian(complete_graph(2));
    CHECK(r.graph.size() == 5);
    CHECK(r.graph.edge_count() == 5);
    CHECK(find_isomorphism(r.graph, cycle_graph(5)).has_value());
}

TEST_CASE("mycielskian of C5 is the Grotzsch graph") {
    auto r = mycielskian(cycle_graph(5));
    CHECK(r.graph.size() == 11);
    CHECK(r.graph.edge_count() == 20);  // 3*5 + 5
    CHECK(chromatic_number(r.graph).number == 4);
}

TEST_CASE("empty graph is rejected") { CHECK_THROWS_AS(mycielskian(Graph(0)), structural_error); }

TEST_CASE("fixed layout and defining invariants") {
    Graph a = cycle_graph(5);
    auto r = mycielskian(a);
    int n = a.size();
    CHECK(r.apex == 2 * n);
    for (int v = 0; v < n; ++v) CHECK(r.sibling[static_cast<std::size_t>(v)] == n + v);
    // sibling set is edge-free
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) CHECK_FALSE(r.graph.adjacent(n + u, n + v));
    // apex neighbors are exactly the siblings
    CHECK(r.graph.degree(r.apex) == n);
    for (int v = 0; v < n; ++v) {
        CHECK(r.graph.adjacent(r.apex, n + v));
        CHECK_FALSE(r.graph.adjacent(r.apex, v));
    }
    // sibling(v) sees exactly the original neighbors of v, never v itself
    for (int v = 0; v < n; ++v) {
        CHECK_FALSE(r.graph.adjacent(v, n + v));
        for (int u = 0; u < n; ++u) CHECK(r.graph.adjacent(n + v, u) == a.adjacent(u, v));
    }
    // the amalgamation construction agrees with the direct formula
    CHECK(r.graph == mycielski_by_formula(a));
}

TEST_CASE("iterated sizes follow 2n+1") {
    auto seq = iterated_mycielskian(complete_graph(2), 2);
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].graph.size() == 5);
    CHECK(seq[1].graph.size() == 11);
}

TEST_CASE("chromatic number rises by exactly one across the corpus") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(2));
    corpus.push_back(complete_graph(3));
    corpus.push_back(path_graph(4));
    corpus.push_back(cycle_graph(5));
    corpus.push_back(cycle_graph(6));
    corpus.push_back(complete_multipartite({2, 2}));
    for (const Graph& a : corpus) {
        auto r = mycielskian(a);
        CHECK(chromatic_number(r.graph).number == chromatic_number(a).number + 1);
    }
}

TEST_CASE("clique number stays at max(omega, 2) for graphs with an edge") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(2));
    corpus.push_back(complete_graph(4));
    corpus.push_back(cycle_graph(5));
    corpus.push_back(path_graph(5));
    for (const Graph& a : corpus) {
        int before = static_cast<int>(oracle::brute_max_clique(a).size());
        auto r = mycielskian(a);
        int after = static_cast<int>(oracle::brute_max_clique(r.graph).size());
        CHECK(after == std::max(before, 2));
    }
}

TEST_CASE("triangle-free inputs give triangle-free Mycielskians") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(2));
    corpus.push_back(path_graph(5));
    corpus.push_back(cycle_graph(5));
    corpus.push_back(half_graph(3));
    for (const Graph& a : corpus) {
        REQUIRE_FALSE(oracle::brute_has_triangle(a));
        CHECK_FALSE(oracle::brute_has_triangle(mycielskian(a).graph));
    }
}

TEST_CASE("max degree follows max(2*max_degree, n)") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(2));
    corpus.push_back(complete_graph(4));
    corpus.push_back(cycle_graph(5));
    corpus.push_back(cycle_graph(9));
    corpus.push_back(path_graph(7));
    for (const Graph& a : corpus) {
        auto r = mycielskian(a);
        int direct = r.graph.max_degree();
        CHECK(direct == std::max(2 * a.max_degree(), a.size()));
    }
}
