#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/amalgamation.hpp"
#include "amalgam/witnesses.hpp"
#include "oracles.hpp"

using namespace amalgam;

TEST_CASE("half graphs witness their own order") {
    for (int k = 1; k <= 5; ++k) {
        Graph h = half_graph(k);
        HalfGraphResult r = max_half_graph(h, k + 2);
        CHECK(r.order == k);
        CHECK(verify_half_graph(h, r.witness));
    }
}

TEST_CASE("half-graph order matches the naive oracle on small graphs") {
    Xoshiro256 rng(19);
    for (int rep = 0; rep < 12; ++rep) {
        int n = rng.uniform_int(2, 7);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        CHECK(max_half_graph(g, 3).order == oracle::brute_half_graph_order(g, 3));
    }
}

TEST_CASE("edgeless and complete extremes") {
    CHECK(max_half_graph(Graph(5), 3).order == 1);  // only the non-edge constraint
    CHECK(max_half_graph(complete_graph(5), 3).order == 0);
    CHECK(max_half_graph(Graph(0), 3).order == 0);
    CHECK(max_half_graph(Graph(1), 3).order == 0);
}

TEST_CASE("complete multipartite graphs have constant half-graph order") {
    int expected = oracle::brute_half_graph_order(complete_multipartite({4, 4, 4}), 4);
    CHECK(expected == 1);  // non-adjacency is an equivalence here, which kills order 2
    for (int part : {4, 6, 8}) {
        Graph g = complete_multipartite({part, part, part});
        CHECK(max_half_graph(g, 4).order == expected);
    }
}

TEST_CASE("half-graph order is monotone under induced supergraphs") {
    Xoshiro256 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(4, 9);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.coin()) s.set(v);
        CHECK(max_half_graph(induced_subgraph(g, s), 3).order <= max_half_graph(g, 3).order);
    }
}

TEST_CASE("half-graph witnesses re-verify definitionally") {
    Graph g = half_graph(4);
    HalfGraphResult r = max_half_graph(g, 4);
    REQUIRE(r.order == 4);
    // tamper: swapping the sides must break verification
    HalfGraphWitness bad = r.witness;
    std::swap(bad.a_seq, bad.b_seq);
    CHECK_FALSE(verify_half_graph(g, bad));
    HalfGraphWitness dup = r.witness;
    dup.b_seq[0] = dup.a_seq[0];
    CHECK_FALSE(verify_half_graph(g, dup));
}

TEST_CASE("shattering on the path P3") {
    Graph p3 = path_graph(3);
    ShatterResult r = max_shattered_set(p3, 3);
    CHECK(r.size == 1);
    CHECK(oracle::brute_shatter_size(p3, 3) == 1);
    CHECK(verify_shatter(p3, r.witness));
}

TEST_CASE("two disjoint 5-cliques shatter only singletons") {
    Graph g = disjoint_clique_union({5, 5});
    CHECK(oracle::brute_shatter_size(g, 3) == 1);
    ShatterResult r = max_shattered_set(g, 3);
    CHECK(r.size == 1);
}

TEST_CASE("shatter size matches the oracle on random graphs") {
    Xoshiro256 rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(3, 8);
        Graph g = oracle::random_graph(n, 1, 2, rng);
        ShatterResult r = max_shattered_set(g, 3);
        CHECK(r.size == oracle::brute_shatter_size(g, 3));
        if (r.size > 0) CHECK(verify_shatter(g, r.witness));
    }
}

TEST_CASE("shatter witness verification catches tampering") {
    // u, v plus an exclusive neighbor for each and one common neighbor
    Graph g(5);
    g.add_edge(0, 2);  // u - a
    g.add_edge(1, 3);  // v - b
    g.add_edge(0, 4);  // u - c
    g.add_edge(1, 4);  // v - c
    CHECK(oracle::brute_shatter_size(g, 2) == 2);
    ShatterResult r = max_shattered_set(g, 2);
    CHECK(r.size == 2);
    REQUIRE(verify_shatter(g, r.witness));
    // repoint the full-subset realizer at the empty-trace vertex
    ShatterWitness bad = r.witness;
    std::vector<int> full = bad.base;
    std::sort(full.begin(), full.end());
    bad.realizers[full] = bad.realizers[std::vector<int>{}];
    CHECK_FALSE(verify_shatter(g, bad));
}

TEST_CASE("saturated approximants witness instability") {
    // all-graphs approximant, audit-clean at (2,3): seed 7, budget 2000, cap 48
    amalgam::GrowOptions opts;
    opts.audit_a_max = 2;
    opts.audit_b_max = 3;
    amalgam::GrowResult r = amalgam::grow_generic(amalgam::ClassDescriptor::all_graphs(), 2000, 48, 7, opts);
    REQUIRE(r.saturated);
    // half-graph order grows with budget and reaches 4+ on the clean graph
    int prev = 0;
    for (int budget : {5, 15, 2000}) {
        amalgam::GrowResult g = amalgam::grow_generic(amalgam::ClassDescriptor::all_graphs(), budget, 48, 7, opts);
        int order = max_half_graph(g.graph, 5).order;
        CHECK(order >= prev);
        prev = order;
    }
    CHECK(max_half_graph(r.graph, 5).order >= 4);
    // edge-free triples are fully shattered there (frozen from this pipeline)
    ShatterResult sh = max_shattered_set(r.graph, 3);
    CHECK(sh.size == 3);
    CHECK(verify_shatter(r.graph, sh.witness));
}

TEST_CASE("edgeless graphs shatter nothing beyond the empty trace") {
    CHECK(max_shattered_set(Graph(4), 3).size == 0);
    CHECK(oracle::brute_shatter_size(Graph(4), 3) == 0);
}
