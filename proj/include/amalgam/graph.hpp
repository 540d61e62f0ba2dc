#pragma once

// Finite simple graphs over dense vertex indices 0..n-1, adjacency held as
// per-vertex bit rows, plus the generators and amalgamation primitives the
// rest of the library is built from.

#include <optional>
#include <string>
#include <vector>

#include "amalgam/bitrow.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

using VertexSet = BitRow;

struct Embedding {
    std::vector<int> map;  // source vertex i -> target vertex map[i]
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& neighbors(int v) const { return adj_[v]; }

    void add_edge(int u, int v);
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);

    long long edge_count() const;
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    VertexSet full_set() const;

    // Symmetry and irreflexivity; cheap enough to assert on every construction.
    bool well_formed() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<BitRow> adj_;
    std::vector<std::string> labels_;
};

// --- generators -----------------------------------------------------------

Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& class_sizes);
Graph disjoint_clique_union(const std::vector<int>& sizes);
Graph path_graph(int n);   // n vertices, n-1 edges
Graph cycle_graph(int n);  // n >= 3
// 2k vertices a_1..a_k then b_1..b_k; edge (a_i, b_j) iff i < j.
Graph half_graph(int k);
// Vertices are the strictly increasing k-tuples over {1..n} in lexicographic
// order; u ~ v iff the last k-1 entries of one equal the first k-1 of the other.
Graph shift_graph(int n, int k);
std::vector<std::vector<int>> shift_graph_tuples(int n, int k);

// --- structure operations --------------------------------------------------

// D = B ⊕_A C. The two embeddings place the same abstract graph `a` inside
// b and c; the result keeps b's vertex ids and appends c's non-glued vertices
// in c's vertex order. Vertex i of c maps to result index recorded in the
// returned embedding.
struct AmalgamResult {
    Graph graph;
    Embedding b_into_result;  // identity on 0..|b|-1
    Embedding c_into_result;
};
AmalgamResult free_amalgam(const Graph& a, const Graph& b, const Graph& c, const Embedding& a_into_b,
                           const Embedding& a_into_c);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph disjoint_union(const Graph& g, const Graph& h);

// Validates that `e` maps g into h preserving edges and non-edges.
bool is_induced_embedding(const Graph& g, const Graph& h, const Embedding& e);

// Exhaustive-with-pruning search for an induced embedding of `pattern` into
// `host`. `pinned[i] >= 0` fixes pattern vertex i to a host vertex. When
// `bijective` is set, |pattern| must equal |host| and the result is an
// isomorphism. Deterministic: lexicographically smallest embedding first.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                const std::vector<int>& pinned = {}, bool bijective = false);

std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h);

// Triangle scan; exact, bitset-based.
bool triangle_free(const Graph& g);

}  // namespace amalgam
