#pragma once

// Certificate-producing analysis of a (1,1)-cell given by piecewise-linear
// rational bound functions f < g <= x on an interval (d0, e0). The outcome is
// one of: a clique builder (identity-segment or non-terminating-orbit case),
// a bipartite shortcut (upper bound never clears d0), or a bounded coloring
// with at most 2N colors where (g*)^N(c) <= f*(c) over the probe set.
//
// Soundness is certificate-level: emitted cliques are re-verified pairwise
// against the cell predicate and colorings are verified proper on samples;
// nothing downstream trusts the N estimate itself.

#include <optional>
#include <string>
#include <vector>

#include "amalgam/graph.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

// Continuous piecewise-linear function on [xs.front(), xs.back()]; must be
// strictly monotone or constant.
struct PLFunction {
    std::vector<Rational> xs;
    std::vector<Rational> ys;

    enum class Shape { Increasing, Decreasing, Constant };

    static PLFunction from_points(std::vector<Rational> xs, std::vector<Rational> ys);
    Shape shape() const;
    Rational eval(const Rational& x) const;
    Rational min_value() const;
    Rational max_value() const;
    PLFunction restrict_to(const Rational& lo, const Rational& hi) const;
    PLFunction max_with_const(const Rational& c) const;  // pointwise max; exact crossing breakpoints
    bool weakly_increasing() const;
    bool strictly_increasing() const;
    // Unique preimage on the strictly increasing part; absent when y is not
    // attained there.
    std::optional<Rational> increasing_preimage(const Rational& y) const;
};

struct CellSpec {
    Rational d0, e0;  // x-interval, open
    Rational d;       // global lower bound of the codomain [d, e)
    PLFunction f, g;

    void validate() const;
    // Directed cell predicate for an ordered pair (x larger, y smaller).
    bool cell_edge(const Rational& x, const Rational& y) const;
};

CellSpec parse_cellspec_json(const std::string& text);
std::string cellspec_to_json(const CellSpec& spec);

enum class CellBranch { CliqueIdentitySegment, CliqueOrbit, BipartiteShortcut, BoundedColoring };

struct CellVerdict {
    CellBranch branch;
    CellSpec original;
    // analyzed subinterval after removing g's fixed points (rightmost maximal
    // fixed-point-free piece); equal to (d0, e0) when g has no fixed points
    Rational lo, hi;
    std::vector<Rational> fixed_points;

    // CliqueIdentitySegment: (seg_a, seg_b) with g == x on it and f < seg_a
    Rational seg_a, seg_b;
    // CliqueOrbit data: the probe whose g*-orbit never reached f*(probe)
    Rational orbit_probe;

    // BoundedColoring data
    int big_n = 0;       // N from the probe maximum of (**)
    Rational ref_point;  // reference c for the interval decomposition

    std::optional<PLFunction> f_star, g_star;

    std::string describe() const;
};

// Executes the case analysis; `orbit_cap` bounds g*-orbit iteration per probe
// (exceeding it is the clique verdict, not an error).
CellVerdict analyze_cell(const CellSpec& spec, int orbit_cap = 10000);

// Graph on the given sample points (all in (d0, e0), duplicates rejected);
// u ~ v iff the cell predicate holds for the ordered pair.
Graph materialize_sample(const CellSpec& spec, const std::vector<Rational>& points);

// k pairwise-adjacent rational points from a clique verdict, verified against
// the cell predicate before returning. Magnitudes beyond `max_bits` bits are a
// resource error.
std::vector<Rational> emit_clique(const CellVerdict& verdict, int k, long long max_bits = 1'000'000);

// Color in 0..2N-1 for a point of the analyzed interval (coloring verdicts).
int color_point(const CellVerdict& verdict, const Rational& u);

}  // namespace amalgam
