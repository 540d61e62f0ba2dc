#pragma once

// Mycielskian via iterated free amalgamation: one sibling per vertex glued
// over the vertex's complement, all sibling extensions amalgamated over the
// original graph, then an apex star attached over the sibling set.
// Layout is fixed: originals 0..n-1, sibling(i) = n+i, apex = 2n.

#include <vector>

#include "amalgam/graph.hpp"

namespace amalgam {

struct MycielskiResult {
    Graph graph;
    VertexSet original;
    std::vector<int> sibling;  // original vertex -> sibling vertex
    int apex = -1;
};

MycielskiResult mycielskian(const Graph& a);

// k successive Mycielskians of `a`; element 0 is Myc(a). Sizes follow
// n_{t+1} = 2 n_t + 1.
std::vector<MycielskiResult> iterated_mycielskian(const Graph& a, int k);

}  // namespace amalgam
