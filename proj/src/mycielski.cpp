#include "amalgam/mycielski.hpp"

namespace amalgam {

namespace {

Embedding identity_embedding(int n) {
    Embedding e;
    e.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e.map[static_cast<std::size_t>(i)] = i;
    return e;
}

// Star on {center} ∪ S as the free amalgam of the single edges u-v* over v*.
// Center at index 0, leaves at 1..leaves.
Graph star_graph(int leaves) {
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph center(1);
    Graph acc = k2;
    for (int i = 1; i < leaves; ++i) {
        Embedding into_acc;
        into_acc.map = {0};
        Embedding into_k2;
        into_k2.map = {0};
        acc = free_amalgam(center, acc, k2, into_acc, into_k2).graph;
    }
    return acc;
}

}  // namespace

MycielskiResult mycielskian(const Graph& a) {
    int n = a.size();
    if (n == 0) throw structural_error("mycielskian of the empty graph is undefined");

    // A_v = A ⊕_{A\{v}} A' realized one vertex at a time, amalgamated over A.
    Graph acc = a;
    Embedding a_into_acc = identity_embedding(n);
    for (int v = 0; v < n; ++v) {
        // glue = A \ {v}; A' is a fresh copy of A whose image of v is the sibling
        VertexSet rest(n);
        for (int u = 0; u < n; ++u)
            if (u != v) rest.set(u);
        Graph a_minus_v = induced_subgraph(a, rest);
        Embedding into_b;  // into current accumulator: originals keep their ids
        Embedding into_c;  // into the fresh copy A'
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            into_b.map.push_back(u);
            into_c.map.push_back(u);
        }
        // A_v is the amalgam of acc (⊇ A) with A' over A\{v}; the lone new
        // vertex is v's sibling and lands at index n+v by construction order.
        acc = free_amalgam(a_minus_v, acc, a, into_b, into_c).graph;
    }

    // attach the apex over the edge-free sibling set; the lone unshared star
    // vertex (the center) is appended last and lands at index 2n
    Graph star = star_graph(n);  // center 0, leaves 1..n
    Graph siblings_free(n);      // the set S
    Embedding s_into_acc;
    Embedding s_into_star;
    for (int v = 0; v < n; ++v) {
        s_into_acc.map.push_back(n + v);
        s_into_star.map.push_back(1 + v);
    }
    Graph full = free_amalgam(siblings_free, acc, star, s_into_acc, s_into_star).graph;

    MycielskiResult res;
    res.graph = std::move(full);
    res.original = VertexSet(2 * n + 1);
    for (int v = 0; v < n; ++v) res.original.set(v);
    res.sibling.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) res.sibling[static_cast<std::size_t>(v)] = n + v;
    res.apex = 2 * n;
    return res;
}

std::vector<MycielskiResult> iterated_mycielskian(const Graph& a, int k) {
    if (k < 0) throw contract_error("iterated_mycielskian: k must be nonnegative");
    std::vector<MycielskiResult> out;
    const Graph* cur = &a;
    for (int i = 0; i < k; ++i) {
        out.push_back(mycielskian(*cur));
        cur = &out.back().graph;
    }
    return out;
}

}  // namespace amalgam
