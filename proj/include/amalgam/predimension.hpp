#pragma once

// Exact-rational predimension calculus: delta_alpha, K_alpha membership with
// minimizing-subset certificates, the two closedness relations, the
// degree-threshold lemma, the k*-coloring procedure and the
// lower-bound witness construction.
//
// All delta comparisons reduce to integer cross-multiplication
// (q*|F| - p*e(F) against 0 for alpha = p/q); floating point never enters.

#include <optional>

#include "amalgam/coloring.hpp"
#include "amalgam/graph.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

enum class Closedness { Weak, Strict };

Rational delta(const Graph& g, const Alpha& alpha);
Rational delta_of_subset(const Graph& g, const VertexSet& s, const Alpha& alpha);

struct MembershipResult {
    bool member = false;
    Rational min_delta;   // over nonempty subsets; 0 for the empty graph
    VertexSet violating;  // a minimizing subset when !member (lexicographically least)
};
// Exhaustive over all vertex subsets; intended for |g| <= ~24.
MembershipResult in_k_alpha(const Graph& g, const Alpha& alpha);

struct ClosednessResult {
    bool closed = false;
    VertexSet violating;  // a minimizing intermediate C when !closed
    Rational delta_base;
    Rational delta_min;  // min over proper supersets (meaningless when none exist)
};
ClosednessResult is_closed(const VertexSet& a, const Graph& b, const Alpha& alpha, Closedness kind);

// Exact check that every subset of g is closed in g; subset-minimum DP,
// intended for |g| <= ~20. Reports the least violating subset if any.
bool all_subsets_closed(const Graph& g, const Alpha& alpha, Closedness kind, VertexSet* violating = nullptr);

std::optional<int> min_degree_vertex_below(const Graph& g, int k_star);

struct KstarOutcome {
    std::optional<Coloring> coloring;
    VertexSet violating;  // induced subgraph with all degrees >= k*, when coloring is absent
};
// Repeated low-degree elimination plus greedy coloring in reverse order.
// Requires alpha * k_star > 2 exactly. When check_membership is set, g is
// first run through in_k_alpha and a non-member is a contract error.
KstarOutcome kstar_coloring(const Graph& g, const Alpha& alpha, int k_star, bool check_membership = false);

// Requires alpha < 1/max_degree(a) exactly; returns the strict closedness
// verdict for a_sub in a (always true under the precondition).
bool closedness_by_degree(const VertexSet& a_sub, const Graph& a, const Alpha& alpha);

struct MycielskianClassResult {
    bool in_class = false;       // Mycielskian of a belongs to K_alpha
    bool lemma_applies = false;  // alpha < 1/max_degree(Mycielskian)
    int myc_max_degree = 0;
};
MycielskianClassResult mycielskian_in_class(const Graph& a, const Alpha& alpha, Closedness kind);

struct EpsilonResult {
    Rational epsilon;
    Graph witness;
};
// Witness with chromatic number n built by iterating the Mycielskian from K_2;
// epsilon = 1/max_degree(witness), so any rational 0 < alpha < epsilon keeps
// the witness and all its subsets strictly closed in K_alpha.
EpsilonResult lower_bound_epsilon(int n);

}  // namespace amalgam
