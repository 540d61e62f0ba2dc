#pragma once

// Exact chromatic number, k-colorability and maximum clique, all emitting
// checkable certificates. The solver is a DSATUR-ordered branch-and-bound
// with unit propagation and canonical color symmetry breaking; ties in
// saturation break by higher plain degree, then lowest index, so runs are
// reproducible.

#include <optional>
#include <vector>

#include "amalgam/graph.hpp"

namespace amalgam {

struct Coloring {
    std::vector<int> colors;  // total map vertex -> color, 0-based
    int palette_size = 0;
};

struct CliqueWitness {
    VertexSet members;
};

// True iff c is total on g and proper; throws structural_error when partial.
bool verify_coloring(const Graph& g, const Coloring& c);

// Colors in reverse elimination order, each vertex getting the least color
// not used by an already-colored neighbor. `order` must be a permutation.
Coloring greedy_color_with_order(const Graph& g, const std::vector<int>& order);

// Deterministic DSATUR heuristic; proper coloring, not necessarily optimal.
Coloring dsatur_heuristic(const Graph& g);

// Exhaustive; absence means no proper coloring with <= k colors exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

struct ChromaticResult {
    int number = 0;
    Coloring witness;
    long long search_nodes = 0;
};
ChromaticResult chromatic_number(const Graph& g);

CliqueWitness max_clique(const Graph& g);
int clique_number(const Graph& g);

// Relabels colors so the first color seen when scanning vertices 0..n-1 is 0.
Coloring canonical_colors(Coloring c);

}  // namespace amalgam
