#include "amalgam/coloring.hpp"

#include <algorithm>
#include <bit>

namespace amalgam {

namespace {

int palette_of(const std::vector<int>& colors) {
    int p = 0;
    for (int c : colors) p = std::max(p, c + 1);
    return p;
}

}  // namespace

Coloring canonical_colors(Coloring c) {
    std::vector<int> relabel(c.colors.size(), -1);
    int next = 0;
    for (int& col : c.colors) {
        if (col < 0) continue;
        if (relabel[static_cast<std::size_t>(col)] < 0) relabel[static_cast<std::size_t>(col)] = next++;
        col = relabel[static_cast<std::size_t>(col)];
    }
    c.palette_size = next;
    return c;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.size()) throw structural_error("coloring is not total on the graph");
    for (int col : c.colors)
        if (col < 0) throw structural_error("coloring is not total on the graph");
    for (auto [u, v] : g.edges())
        if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

Coloring greedy_color_with_order(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.size()) throw structural_error("order is not a permutation of the vertices");
    std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
    for (int v : order) {
        if (v < 0 || v >= g.size() || seen[static_cast<std::size_t>(v)])
            throw structural_error("order is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(g.size()), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<bool> taken(static_cast<std::size_t>(g.degree(v)) + 2, false);
        for (int u = g.neighbors(v).next_bit(0); u >= 0; u = g.neighbors(v).next_bit(u + 1)) {
            int cu = c.colors[static_cast<std::size_t>(u)];
            if (cu >= 0 && cu < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(cu)] = true;
        }
        int col = 0;
        while (taken[static_cast<std::size_t>(col)]) ++col;
        c.colors[static_cast<std::size_t>(v)] = col;
    }
    c.palette_size = palette_of(c.colors);
    return canonical_colors(std::move(c));
}

Coloring dsatur_heuristic(const Graph& g) {
    int n = g.size();
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<bool>> nb_colors;  // per-vertex seen colors, grows as palette grows
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    nb_colors.resize(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (c.colors[static_cast<std::size_t>(v)] >= 0) continue;
            if (best < 0 || sat[static_cast<std::size_t>(v)] > sat[static_cast<std::size_t>(best)] ||
                (sat[static_cast<std::size_t>(v)] == sat[static_cast<std::size_t>(best)] &&
                 (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best))))
                best = v;
        }
        auto& seen = nb_colors[static_cast<std::size_t>(best)];
        int col = 0;
        while (col < static_cast<int>(seen.size()) && seen[static_cast<std::size_t>(col)]) ++col;
        c.colors[static_cast<std::size_t>(best)] = col;
        for (int u = g.neighbors(best).next_bit(0); u >= 0; u = g.neighbors(best).next_bit(u + 1)) {
            if (c.colors[static_cast<std::size_t>(u)] >= 0) continue;
            auto& su = nb_colors[static_cast<std::size_t>(u)];
            if (col >= static_cast<int>(su.size())) su.resize(static_cast<std::size_t>(col) + 1, false);
            if (!su[static_cast<std::size_t>(col)]) {
                su[static_cast<std::size_t>(col)] = true;
                ++sat[static_cast<std::size_t>(u)];
            }
        }
    }
    c.palette_size = palette_of(c.colors);
    return canonical_colors(std::move(c));
}

namespace {

// Exact k-coloring search. Colors live in a 64-bit mask per vertex.
struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> assign;
    std::vector<std::uint64_t> allowed;
    std::vector<int> static_deg;
    int uncolored;
    int used_colors = 0;
    long long nodes = 0;

    struct Change {
        int v;
        std::uint64_t old_allowed;
    };
    std::vector<Change> trail;
    std::vector<std::pair<int, int>> assigned_trail;  // (vertex, prev_used_colors)

    KColorSearch(const Graph& graph, int kk)
        : g(graph), k(kk), assign(static_cast<std::size_t>(graph.size()), -1),
          allowed(static_cast<std::size_t>(graph.size()), kk >= 64 ? ~0ull : ((1ull << kk) - 1)),
          uncolored(graph.size()) {
        static_deg.reserve(static_cast<std::size_t>(graph.size()));
        for (int v = 0; v < graph.size(); ++v) static_deg.push_back(graph.degree(v));
    }

    bool assign_color(int v, int col, std::vector<int>& forced) {
        assign[static_cast<std::size_t>(v)] = col;
        --uncolored;
        assigned_trail.emplace_back(v, used_colors);
        if (col >= used_colors) used_colors = col + 1;
        std::uint64_t bit = 1ull << col;
        for (int u = g.neighbors(v).next_bit(0); u >= 0; u = g.neighbors(v).next_bit(u + 1)) {
            if (assign[static_cast<std::size_t>(u)] >= 0) continue;
            std::uint64_t a = allowed[static_cast<std::size_t>(u)];
            if (!(a & bit)) continue;
            trail.push_back({u, a});
            a &= ~bit;
            allowed[static_cast<std::size_t>(u)] = a;
            if (a == 0) return false;
            if ((a & (a - 1)) == 0) forced.push_back(u);
        }
        return true;
    }

    void rewind(std::size_t trail_mark, std::size_t assign_mark) {
        while (trail.size() > trail_mark) {
            allowed[static_cast<std::size_t>(trail.back().v)] = trail.back().old_allowed;
            trail.pop_back();
        }
        while (assigned_trail.size() > assign_mark) {
            auto [v, prev_used] = assigned_trail.back();
            assigned_trail.pop_back();
            assign[static_cast<std::size_t>(v)] = -1;
            ++uncolored;
            used_colors = prev_used;
        }
    }

    // Assigns v=col, then drains every forced single-color vertex.
    bool propagate(int v, int col) {
        std::vector<int> forced;
        if (!assign_color(v, col, forced)) return false;
        while (!forced.empty()) {
            int u = forced.back();
            forced.pop_back();
            if (assign[static_cast<std::size_t>(u)] >= 0) continue;
            std::uint64_t a = allowed[static_cast<std::size_t>(u)];
            if (a == 0) return false;
            int fcol = std::countr_zero(a);
            if (!assign_color(u, fcol, forced)) return false;
        }
        return true;
    }

    int pick_branch_vertex() const {
        int best = -1, best_sat = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (assign[static_cast<std::size_t>(v)] >= 0) continue;
            int sat = k - std::popcount(allowed[static_cast<std::size_t>(v)]);
            if (sat > best_sat ||
                (sat == best_sat && (static_deg[static_cast<std::size_t>(v)] > static_deg[static_cast<std::size_t>(best)] ||
                                     (static_deg[static_cast<std::size_t>(v)] == static_deg[static_cast<std::size_t>(best)] && v < best))))
                best = v, best_sat = sat;
        }
        return best;
    }

    bool solve() {
        ++nodes;
        if (uncolored == 0) return true;
        int v = pick_branch_vertex();
        // canonical symmetry breaking: used colors plus one fresh color
        std::uint64_t cand = allowed[static_cast<std::size_t>(v)];
        int cap = std::min(used_colors + 1, k);
        if (cap < 64) cand &= (1ull << cap) - 1;
        while (cand) {
            int col = std::countr_zero(cand);
            cand &= cand - 1;
            std::size_t tm = trail.size(), am = assigned_trail.size();
            if (propagate(v, col) && solve()) return true;
            rewind(tm, am);
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw contract_error("is_k_colorable: k must be nonnegative");
    int n = g.size();
    if (n == 0) return Coloring{{}, 0};
    if (g.edge_count() == 0) {
        if (k < 1) return std::nullopt;
        Coloring c;
        c.colors.assign(static_cast<std::size_t>(n), 0);
        c.palette_size = 1;
        return c;
    }
    if (k < 2) return std::nullopt;
    if (k >= g.max_degree() + 1) {
        // greedy always fits inside deg+1 colors
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        Coloring c = greedy_color_with_order(g, order);
        if (c.palette_size <= k) return c;
    }
    if (k > 64) throw resource_error("is_k_colorable: palettes beyond 64 colors are unsupported");
    KColorSearch s(g, k);
    if (!s.solve()) return std::nullopt;
    Coloring c;
    c.colors = std::move(s.assign);
    c.palette_size = palette_of(c.colors);
    return canonical_colors(std::move(c));
}

ChromaticResult chromatic_number(const Graph& g) {
    ChromaticResult res;
    if (g.size() == 0) return res;
    CliqueWitness cw = max_clique(g);
    int lb = cw.members.count();
    Coloring ub = dsatur_heuristic(g);
    while (ub.palette_size > lb) {
        int target = ub.palette_size - 1;
        if (target > 64) throw resource_error("chromatic_number: palette bound exceeds 64 colors");
        KColorSearch s(g, target);
        bool ok = s.solve();
        res.search_nodes += s.nodes;
        if (!ok) break;
        Coloring c;
        c.colors = std::move(s.assign);
        c.palette_size = palette_of(c.colors);
        ub = canonical_colors(std::move(c));
    }
    res.number = ub.palette_size;
    res.witness = std::move(ub);
    return res;
}

namespace {

// Tomita-style maximum clique: greedy color bound over candidate sets.
struct CliqueSearch {
    const Graph& g;
    BitRow best;
    std::vector<int> current;
    long long nodes = 0;

    explicit CliqueSearch(const Graph& graph) : g(graph), best(graph.size()) {}

    // Sorts candidates by a greedy coloring; returns (vertex, bound) pairs in
    // ascending bound order.
    void expand(const BitRow& cand) {
        ++nodes;
        std::vector<int> verts = cand.to_vector();
        if (verts.empty()) {
            if (static_cast<int>(current.size()) > best.count()) {
                BitRow b(g.size());
                for (int v : current) b.set(v);
                best = b;
            }
            return;
        }
        // greedy color classes for the bound
        std::vector<int> color(verts.size(), 0);
        std::vector<BitRow> classes;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int v = verts[i];
            std::size_t cls = 0;
            while (cls < classes.size() && classes[cls].intersects(g.neighbors(v))) ++cls;
            if (cls == classes.size()) classes.emplace_back(g.size());
            classes[cls].set(v);
            color[i] = static_cast<int>(cls) + 1;
        }
        // iterate vertices grouped by descending color bound
        std::vector<std::size_t> idx(verts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return color[x] < color[y]; });
        BitRow remaining = cand;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
            int v = verts[*it];
            if (static_cast<int>(current.size()) + color[*it] <= best.count()) return;
            current.push_back(v);
            BitRow next = remaining;
            next &= g.neighbors(v);
            expand(next);
            current.pop_back();
            remaining.reset(v);
        }
    }
};

}  // namespace

CliqueWitness max_clique(const Graph& g) {
    CliqueSearch s(g);
    if (g.size() > 0) {
        BitRow all = g.full_set();
        s.expand(all);
    }
    return CliqueWitness{std::move(s.best)};
}

int clique_number(const Graph& g) { return max_clique(g).members.count(); }

}  // namespace amalgam
