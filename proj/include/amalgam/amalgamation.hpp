#pragma once

// Amalgamation classes, extension-axiom auditing, generic-structure growth by
// free amalgamation, target embedding, and finite homogeneity checking.
//
// Three built-in class families: all finite graphs, K_m-free graphs, and the
// predimension classes K_alpha with a weak or strict closure notion. Growth
// for predimension classes is exhaustively verified after every step and is
// therefore size-capped; the Fraissé families scale to a few hundred vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/graph.hpp"
#include "amalgam/predimension.hpp"

namespace amalgam {

enum class ClassKind { AllGraphs, CliqueFree, Predimension };

struct ClassDescriptor {
    ClassKind kind = ClassKind::AllGraphs;
    std::string name = "allgraphs";
    int forbidden_clique = 0;  // CliqueFree: least clique size NOT allowed
    std::optional<Alpha> alpha;
    Closedness closure = Closedness::Weak;

    static ClassDescriptor all_graphs();
    static ClassDescriptor clique_free(int m);  // K_m-free, m >= 3
    static ClassDescriptor k_alpha(const Alpha& a, Closedness closure);
};

bool has_clique_of_size(const Graph& g, int m);
bool class_member(const ClassDescriptor& d, const Graph& g);
// Closedness of a in g under the class's closure notion (trivially true for
// the Fraissé families).
bool class_closed_in(const ClassDescriptor& d, const VertexSet& a, const Graph& g);

// One-point-or-more extension over a base set: traces give each new vertex's
// adjacency into the base (bit i = base[i]); overlay gives adjacency among the
// new vertices. Canonical under permutations of the new vertices.
struct ExtensionPattern {
    int base_size = 0;
    std::vector<std::uint64_t> traces;
    std::vector<std::uint64_t> overlay;  // overlay[i] bit j (j<i) = edge new_i ~ new_j

    int new_count() const { return static_cast<int>(traces.size()); }
    std::string describe() const;
};

struct MissingExtension {
    std::vector<int> base;  // concrete vertices of g, ascending
    ExtensionPattern pattern;
};

// Enumerates every (A, B-over-A isomorphism type) with |A| <= a_max,
// |B| <= b_max and B in the class, and reports the pairs with no embedding of
// B into g fixing A pointwise. For predimension classes only closed bases and
// closed extensions count, and a realization must land on a closed image.
// Work is metered; exceeding the budget raises resource_error.
// max_missing truncates the report (0 = unbounded); the growth loop passes a
// cap since it re-audits after draining its queue anyway.
std::vector<MissingExtension> audit_extension_axioms(const Graph& g, const ClassDescriptor& d, int a_max, int b_max,
                                                     std::uint64_t node_budget = 400'000'000ull,
                                                     std::size_t max_missing = 0);

struct GrowthStep {
    std::string description;
    int size = 0;
    long long edges = 0;
    std::optional<int> chi;
    std::optional<int> omega;
};

struct GrowthLog {
    std::uint64_t seed = 0;
    std::vector<GrowthStep> steps;
    std::string note;
};

struct GrowOptions {
    int audit_a_max = 2;
    int audit_b_max = 3;
    // Merge pending one-vertex extensions into one realization: the new vertex
    // is wired to the union of the positive trace sides, away from the union
    // of the negative sides (Fraissé classes only). Without this the pair and
    // triple axiom families provably never saturate at finite size.
    bool cover_batching = true;
    int batch_limit = 60;
    bool log_chi = false;
    int predimension_size_cap = 20;  // growth keeps exhaustive verification exact
    std::uint64_t audit_node_budget = 400'000'000ull;
};

struct GrowResult {
    Graph graph;
    GrowthLog log;
    bool saturated = false;  // audit at (audit_a_max, audit_b_max) came back empty
};

// Starts from the empty graph, or from `start` (which must already be in the
// class; its log rows, when given, are kept in front).
GrowResult grow_generic(const ClassDescriptor& d, int budget, int size_cap, std::uint64_t seed,
                        const GrowOptions& opts = {}, const Graph* start = nullptr,
                        const GrowthLog* start_log = nullptr);

struct EmbedResult {
    Graph graph;
    Embedding embedding;    // target -> result
    int steps_added = 0;    // 0 when the target already embedded
    bool image_closed = true;  // predimension classes: closure of the image (when checkable)
};
// Realizes the target vertex-by-vertex as extension axioms over the partial
// image; requires target in the class.
EmbedResult embed_target(const Graph& g, const ClassDescriptor& d, const Graph& target, GrowthLog* log = nullptr);

struct HomogeneityResult {
    bool homogeneous = true;
    std::vector<int> source;  // counterexample: iso source/target sets + map
    std::vector<int> target;
    std::vector<int> map;  // source[i] -> map[i]
};
// Every isomorphism between induced subgraphs of size <= k must extend to an
// automorphism; exhaustive, intended for |g| <= ~16.
HomogeneityResult check_homogeneity(const Graph& g, int k);

// FAP probe: b, c in the class glued over a; true iff the free amalgam stays
// in the class (and, for predimension classes, b and c remain closed in it).
bool has_fap_instance(const ClassDescriptor& d, const Graph& a, const Graph& b, const Graph& c,
                      const Embedding& a_into_b, const Embedding& a_into_c);

}  // namespace amalgam
