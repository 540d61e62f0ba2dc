#include "amalgam/graph.hpp"

#include <algorithm>
#include <numeric>

namespace amalgam {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), BitRow(n)) {
    if (n < 0) throw structural_error("negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw structural_error("edge endpoint out of range");
    if (u == v) throw structural_error("loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::set_label(int v, std::string label) {
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_bit(u + 1); v >= 0; v = adj_[u].next_bit(v + 1)) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::full_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
}

bool Graph::well_formed() const {
    for (int u = 0; u < n_; ++u) {
        if (adj_[u].test(u)) return false;
        for (int v = adj_[u].next_bit(0); v >= 0; v = adj_[u].next_bit(v + 1))
            if (!adj_[v].test(u)) return false;
    }
    return true;
}

// --- generators -----------------------------------------------------------

Graph complete_graph(int n) {
    if (n < 1) throw structural_error("complete_graph requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& class_sizes) {
    if (class_sizes.empty()) throw structural_error("complete_multipartite requires a nonempty class list");
    for (int s : class_sizes)
        if (s < 1) throw structural_error("complete_multipartite class sizes must be positive");
    int n = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
    Graph g(n);
    std::vector<int> cls(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c)
        for (int i = 0; i < class_sizes[c]; ++i) cls[static_cast<std::size_t>(v++)] = static_cast<int>(c);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(w)]) g.add_edge(u, w);
    return g;
}

Graph disjoint_clique_union(const std::vector<int>& sizes) {
    if (sizes.empty()) throw structural_error("disjoint_clique_union requires a nonempty size list");
    for (int s : sizes)
        if (s < 1) throw structural_error("disjoint_clique_union sizes must be positive");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(n);
    int base = 0;
    for (int s : sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw structural_error("path_graph requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw structural_error("cycle_graph requires n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph half_graph(int k) {
    if (k < 1) throw structural_error("half_graph requires k >= 1");
    Graph g(2 * k);  // a_i = i-1, b_j = k + j-1 (1-based i, j)
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i < j) g.add_edge(i - 1, k + j - 1);
    return g;
}

std::vector<std::vector<int>> shift_graph_tuples(int n, int k) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            tuples.push_back(cur);
            return;
        }
        for (int v = low; v <= n - (k - pos) + 1; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return tuples;
}

Graph shift_graph(int n, int k) {
    if (k < 2) throw structural_error("shift_graph requires k >= 2");
    if (n < k) throw structural_error("shift_graph requires n >= k");
    auto tuples = shift_graph_tuples(n, k);
    Graph g(static_cast<int>(tuples.size()));
    auto shifted = [&](const std::vector<int>& u, const std::vector<int>& v) {
        for (int i = 0; i + 1 < k; ++i)
            if (u[static_cast<std::size_t>(i + 1)] != v[static_cast<std::size_t>(i)]) return false;
        return true;
    };
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size(); ++j)
            if (shifted(tuples[i], tuples[j]) || shifted(tuples[j], tuples[i]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

// --- structure operations --------------------------------------------------

bool is_induced_embedding(const Graph& g, const Graph& h, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != g.size()) return false;
    std::vector<bool> used(static_cast<std::size_t>(h.size()), false);
    for (int v : e.map) {
        if (v < 0 || v >= h.size() || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != h.adjacent(e.map[static_cast<std::size_t>(u)], e.map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

AmalgamResult free_amalgam(const Graph& a, const Graph& b, const Graph& c, const Embedding& a_into_b,
                           const Embedding& a_into_c) {
    if (!is_induced_embedding(a, b, a_into_b)) throw structural_error("free_amalgam: glue map into B is not an induced embedding");
    if (!is_induced_embedding(a, c, a_into_c)) throw structural_error("free_amalgam: glue map into C is not an induced embedding");

    int nb = b.size(), nc = c.size(), na = a.size();
    // c vertex -> result vertex
    std::vector<int> cmap(static_cast<std::size_t>(nc), -1);
    for (int i = 0; i < na; ++i) cmap[static_cast<std::size_t>(a_into_c.map[static_cast<std::size_t>(i)])] =
        a_into_b.map[static_cast<std::size_t>(i)];
    int next = nb;
    for (int v = 0; v < nc; ++v)
        if (cmap[static_cast<std::size_t>(v)] < 0) cmap[static_cast<std::size_t>(v)] = next++;

    Graph d(nb + nc - na);
    for (auto [u, v] : b.edges()) d.add_edge(u, v);
    for (auto [u, v] : c.edges()) {
        int du = cmap[static_cast<std::size_t>(u)], dv = cmap[static_cast<std::size_t>(v)];
        if (!d.adjacent(du, dv)) d.add_edge(du, dv);
    }
    if (b.has_labels())
        for (int v = 0; v < nb; ++v)
            if (!b.labels()[static_cast<std::size_t>(v)].empty()) d.set_label(v, b.labels()[static_cast<std::size_t>(v)]);
    if (c.has_labels())
        for (int v = 0; v < nc; ++v)
            if (!c.labels()[static_cast<std::size_t>(v)].empty())
                d.set_label(cmap[static_cast<std::size_t>(v)], c.labels()[static_cast<std::size_t>(v)]);

    Embedding bid;
    bid.map.resize(static_cast<std::size_t>(nb));
    for (int v = 0; v < nb; ++v) bid.map[static_cast<std::size_t>(v)] = v;
    return AmalgamResult{std::move(d), std::move(bid), Embedding{std::move(cmap)}};
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.capacity() != g.size()) throw structural_error("induced_subgraph: vertex set capacity mismatch");
    std::vector<int> verts = s.to_vector();
    for (int v : verts)
        if (v >= g.size()) throw structural_error("induced_subgraph: vertex out of range");
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.has_labels())
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (!g.labels()[static_cast<std::size_t>(verts[i])].empty())
                h.set_label(static_cast<int>(i), g.labels()[static_cast<std::size_t>(verts[i])]);
    return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph d(g.size() + h.size());
    for (auto [u, v] : g.edges()) d.add_edge(u, v);
    for (auto [u, v] : h.edges()) d.add_edge(g.size() + u, g.size() + v);
    return d;
}

namespace {

// Backtracking over pattern vertices in a most-constrained-first static order.
struct EmbedSearch {
    const Graph& pat;
    const Graph& host;
    std::vector<int> order;        // pattern vertices in assignment order
    std::vector<int> assign;       // pattern vertex -> host vertex or -1
    BitRow used;                   // host vertices taken
    BitRow all_hosts;
    bool bijective;

    EmbedSearch(const Graph& p, const Graph& h, bool bij)
        : pat(p), host(h), assign(static_cast<std::size_t>(p.size()), -1), used(h.size()),
          all_hosts(h.full_set()), bijective(bij) {}

    bool run(const std::vector<int>& pinned) {
        int np = pat.size();
        for (int i = 0; i < np; ++i)
            if (!pinned.empty() && pinned[static_cast<std::size_t>(i)] >= 0) {
                int hv = pinned[static_cast<std::size_t>(i)];
                if (hv >= host.size() || used.test(hv)) return false;
                assign[static_cast<std::size_t>(i)] = hv;
                used.set(hv);
            }
        // check pinned part is consistent
        for (int u = 0; u < np; ++u)
            for (int v = u + 1; v < np; ++v) {
                int au = assign[static_cast<std::size_t>(u)], av = assign[static_cast<std::size_t>(v)];
                if (au >= 0 && av >= 0 && pat.adjacent(u, v) != host.adjacent(au, av)) return false;
            }
        // static order: pinned first (already assigned), then by descending
        // number of already-ordered neighbors, then descending degree, then index
        std::vector<bool> placed(static_cast<std::size_t>(np), false);
        for (int i = 0; i < np; ++i)
            if (assign[static_cast<std::size_t>(i)] >= 0) {
                order.push_back(i);
                placed[static_cast<std::size_t>(i)] = true;
            }
        while (static_cast<int>(order.size()) < np) {
            int best = -1, best_conn = -1, best_deg = -1;
            for (int i = 0; i < np; ++i) {
                if (placed[static_cast<std::size_t>(i)]) continue;
                int conn = 0;
                for (int j : order)
                    if (pat.adjacent(i, j)) ++conn;
                int deg = pat.degree(i);
                if (conn > best_conn || (conn == best_conn && (deg > best_deg || (deg == best_deg && (best < 0 || i < best))))) {
                    best = i;
                    best_conn = conn;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = true;
        }
        int start = 0;
        while (start < np && assign[static_cast<std::size_t>(order[static_cast<std::size_t>(start)])] >= 0) ++start;
        return extend(start);
    }

    bool extend(int depth) {
        if (depth == pat.size()) return true;
        int pv = order[static_cast<std::size_t>(depth)];
        BitRow cand = all_hosts;
        cand.and_not(used);
        for (int q = 0; q < pat.size(); ++q) {
            int hq = assign[static_cast<std::size_t>(q)];
            if (hq < 0) continue;
            if (pat.adjacent(pv, q))
                cand &= host.neighbors(hq);
            else
                cand.and_not(host.neighbors(hq));
        }
        for (int hv = cand.next_bit(0); hv >= 0; hv = cand.next_bit(hv + 1)) {
            if (bijective && host.degree(hv) != pat.degree(pv)) continue;
            assign[static_cast<std::size_t>(pv)] = hv;
            used.set(hv);
            if (extend(depth + 1)) return true;
            used.reset(hv);
            assign[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                const std::vector<int>& pinned, bool bijective) {
    if (pattern.size() > host.size()) return std::nullopt;
    if (bijective && pattern.size() != host.size()) return std::nullopt;
    if (!pinned.empty() && static_cast<int>(pinned.size()) != pattern.size())
        throw structural_error("find_induced_embedding: pinned vector size mismatch");
    EmbedSearch s(pattern, host, bijective);
    if (!s.run(pinned)) return std::nullopt;
    return Embedding{std::move(s.assign)};
}

std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.size(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.size(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
    return find_induced_embedding(g, h, {}, true);
}

bool triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

}  // namespace amalgam
