#include "amalgam/amalgamation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "amalgam/rng.hpp"

namespace amalgam {

ClassDescriptor ClassDescriptor::all_graphs() { return ClassDescriptor{}; }

ClassDescriptor ClassDescriptor::clique_free(int m) {
    if (m < 3) throw contract_error("clique_free: forbidden clique size must be at least 3");
    ClassDescriptor d;
    d.kind = ClassKind::CliqueFree;
    d.name = m == 3 ? "trianglefree" : ("k" + std::to_string(m) + "free");
    d.forbidden_clique = m;
    return d;
}

ClassDescriptor ClassDescriptor::k_alpha(const Alpha& a, Closedness closure) {
    if (closure == Closedness::Strict && a.value == 1)
        throw contract_error("k_alpha: the strict closure notion assumes alpha < 1");
    ClassDescriptor d;
    d.kind = ClassKind::Predimension;
    d.name = "kalpha";
    d.alpha = a;
    d.closure = closure;
    return d;
}

namespace {

bool clique_search(const Graph& g, const BitRow& cand, int need) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    for (int v = cand.next_bit(0); v >= 0; v = cand.next_bit(v + 1)) {
        BitRow next = cand;
        next &= g.neighbors(v);
        // only look at later vertices to avoid revisiting subsets
        for (int u = next.next_bit(0); u >= 0 && u <= v; u = next.next_bit(u + 1)) next.reset(u);
        if (clique_search(g, next, need - 1)) return true;
    }
    return false;
}

}  // namespace

bool has_clique_of_size(const Graph& g, int m) {
    if (m <= 0) return true;
    if (m == 1) return g.size() > 0;
    return clique_search(g, g.full_set(), m);
}

bool class_member(const ClassDescriptor& d, const Graph& g) {
    switch (d.kind) {
        case ClassKind::AllGraphs:
            return true;
        case ClassKind::CliqueFree:
            return !has_clique_of_size(g, d.forbidden_clique);
        case ClassKind::Predimension:
            return in_k_alpha(g, *d.alpha).member;
    }
    return false;
}

bool class_closed_in(const ClassDescriptor& d, const VertexSet& a, const Graph& g) {
    if (d.kind != ClassKind::Predimension) return true;
    return is_closed(a, g, *d.alpha, d.closure).closed;
}

std::string ExtensionPattern::describe() const {
    std::string s = "A" + std::to_string(base_size) + "+" + std::to_string(new_count()) + ":";
    for (std::size_t i = 0; i < traces.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(traces[i]);
        s += "/";
        s += std::to_string(overlay[i]);
    }
    return s;
}

namespace {

std::vector<std::vector<int>> permutations_of(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Encoding used for canonicity: traces then row-by-row overlay bits.
std::vector<std::uint64_t> pattern_encoding(const ExtensionPattern& p) {
    std::vector<std::uint64_t> code = p.traces;
    code.insert(code.end(), p.overlay.begin(), p.overlay.end());
    return code;
}

ExtensionPattern apply_perm(const ExtensionPattern& p, const std::vector<int>& perm) {
    int m = p.new_count();
    ExtensionPattern q;
    q.base_size = p.base_size;
    q.traces.assign(static_cast<std::size_t>(m), 0);
    q.overlay.assign(static_cast<std::size_t>(m), 0);
    // vertex i of q is vertex perm[i] of p
    for (int i = 0; i < m; ++i) q.traces[static_cast<std::size_t>(i)] = p.traces[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
            int hi = std::max(pi, pj), lo = std::min(pi, pj);
            bool edge = (p.overlay[static_cast<std::size_t>(hi)] >> lo) & 1ull;
            if (edge) q.overlay[static_cast<std::size_t>(i)] |= (1ull << j);
        }
    return q;
}

// All canonical patterns with m new vertices over a base of size s.
// Cached; the (s, m) pairs in play are small.
const std::vector<ExtensionPattern>& canonical_patterns(int s, int m, std::uint64_t& ops) {
    static std::vector<std::vector<std::vector<ExtensionPattern>>> cache;  // [s][m]
    if (s >= static_cast<int>(cache.size())) cache.resize(static_cast<std::size_t>(s) + 1);
    auto& row = cache[static_cast<std::size_t>(s)];
    if (m >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(m) + 1);
    auto& slot = row[static_cast<std::size_t>(m)];
    if (!slot.empty() || m == 0) return slot;

    auto perms = permutations_of(m);
    std::uint64_t trace_space = 1ull << (static_cast<std::uint64_t>(s) * m);
    std::uint64_t overlay_space = 1ull << (static_cast<std::uint64_t>(m) * (m - 1) / 2);
    for (std::uint64_t t = 0; t < trace_space; ++t) {
        for (std::uint64_t o = 0; o < overlay_space; ++o) {
            ++ops;
            ExtensionPattern p;
            p.base_size = s;
            p.traces.resize(static_cast<std::size_t>(m));
            p.overlay.assign(static_cast<std::size_t>(m), 0);
            for (int i = 0; i < m; ++i)
                p.traces[static_cast<std::size_t>(i)] = (t >> (static_cast<std::uint64_t>(i) * s)) & ((1ull << s) - 1);
            int bit = 0;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < i; ++j, ++bit)
                    if ((o >> bit) & 1u) p.overlay[static_cast<std::size_t>(i)] |= (1ull << j);
            auto enc = pattern_encoding(p);
            bool canonical = true;
            for (const auto& perm : perms) {
                if (pattern_encoding(apply_perm(p, perm)) < enc) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) slot.push_back(std::move(p));
        }
    }
    return slot;
}

// B = g[base] extended by the pattern, as a standalone graph (base first).
Graph build_extension_graph(const Graph& g, const std::vector<int>& base, const ExtensionPattern& p) {
    int s = static_cast<int>(base.size());
    int m = p.new_count();
    Graph b(s + m);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (g.adjacent(base[static_cast<std::size_t>(i)], base[static_cast<std::size_t>(j)])) b.add_edge(i, j);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < s; ++j)
            if ((p.traces[static_cast<std::size_t>(i)] >> j) & 1ull) b.add_edge(s + i, j);
        for (int j = 0; j < i; ++j)
            if ((p.overlay[static_cast<std::size_t>(i)] >> j) & 1ull) b.add_edge(s + i, s + j);
    }
    return b;
}

// Per-base candidate rows: candidates[t] = vertices outside base whose trace
// on base equals t.
std::vector<BitRow> trace_candidates(const Graph& g, const std::vector<int>& base) {
    int s = static_cast<int>(base.size());
    std::vector<BitRow> cand(std::size_t(1) << s, BitRow(g.size()));
    BitRow in_base(g.size());
    for (int v : base) in_base.set(v);
    for (int v = 0; v < g.size(); ++v) {
        if (in_base.test(v)) continue;
        std::uint64_t t = 0;
        for (int i = 0; i < s; ++i)
            if (g.adjacent(v, base[static_cast<std::size_t>(i)])) t |= (1ull << i);
        cand[static_cast<std::size_t>(t)].set(v);
    }
    return cand;
}

// The closed-image requirement only applies to predimension classes; closed_mask
// is a 2^n closedness table when available (small n), otherwise empty and the
// check falls back to is_closed.
struct RealizationCheck {
    const Graph& g;
    const ClassDescriptor& d;
    const std::vector<BitRow>& cand;
    const std::vector<int>& base;
    const ExtensionPattern& pat;
    const std::vector<char>* closed_mask;
    std::uint64_t* ops;

    std::vector<int> chosen;

    bool closed_image_ok(const std::vector<int>& newly) const {
        if (d.kind != ClassKind::Predimension) return true;
        BitRow image(g.size());
        for (int v : base) image.set(v);
        for (int v : newly) image.set(v);
        if (closed_mask) {
            std::size_t mask = 0;
            for (int v = image.next_bit(0); v >= 0; v = image.next_bit(v + 1)) mask |= (std::size_t(1) << v);
            return (*closed_mask)[mask] != 0;
        }
        return is_closed(image, g, *d.alpha, d.closure).closed;
    }

    bool search(int i) {
        ++*ops;
        int m = pat.new_count();
        if (i == m) return closed_image_ok(chosen);
        BitRow c = cand[pat.traces[static_cast<std::size_t>(i)]];
        for (int j = 0; j < i; ++j) {
            int u = chosen[static_cast<std::size_t>(j)];
            bool want = (pat.overlay[static_cast<std::size_t>(i)] >> j) & 1ull;
            if (want)
                c &= g.neighbors(u);
            else
                c.and_not(g.neighbors(u));
            c.reset(u);
        }
        for (int v = c.next_bit(0); v >= 0; v = c.next_bit(v + 1)) {
            chosen.push_back(v);
            if (search(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

bool extension_realized(const Graph& g, const ClassDescriptor& d, const std::vector<int>& base,
                        const ExtensionPattern& pat, const std::vector<BitRow>& cand,
                        const std::vector<char>* closed_mask, std::uint64_t& ops) {
    RealizationCheck rc{g, d, cand, base, pat, closed_mask, &ops, {}};
    return rc.search(0);
}

// 2^n closedness table via the superset-minimum DP; n <= 20.
std::vector<char> closed_subset_table(const Graph& g, const Alpha& alpha, Closedness kind) {
    int n = g.size();
    if (!alpha.fits_int64()) throw resource_error("closedness table: alpha too large");
    long long p = alpha.num(), q = alpha.den();
    std::size_t full = std::size_t(1) << n;
    std::vector<long long> score(full, 0);
    for (std::size_t s = 1; s < full; ++s) {
        int v = std::countr_zero(s);
        std::size_t rest = s & (s - 1);
        long long e_inc = 0;
        const BitRow& nb = g.neighbors(v);
        for (std::size_t r = rest; r;) {
            int u = std::countr_zero(r);
            r &= r - 1;
            if (nb.test(u)) ++e_inc;
        }
        score[s] = score[rest] + q - p * e_inc;
    }
    std::vector<long long> msup = score;
    for (std::size_t s = full; s-- > 0;)
        for (int i = 0; i < n; ++i) {
            std::size_t t = s | (std::size_t(1) << i);
            if (t != s) msup[s] = std::min(msup[s], msup[t]);
        }
    std::vector<char> closed(full, 1);
    for (std::size_t s = 0; s < full; ++s) {
        long long proper = std::numeric_limits<long long>::max();
        for (int i = 0; i < n; ++i) {
            std::size_t t = s | (std::size_t(1) << i);
            if (t != s) proper = std::min(proper, msup[t]);
        }
        if (proper == std::numeric_limits<long long>::max()) continue;
        closed[s] = kind == Closedness::Weak ? (score[s] <= proper) : (score[s] < proper);
    }
    return closed;
}

void enumerate_subsets(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int v = from; v <= n - (size - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<MissingExtension> audit_extension_axioms(const Graph& g, const ClassDescriptor& d, int a_max, int b_max,
                                                     std::uint64_t node_budget, std::size_t max_missing) {
    if (a_max < 0 || b_max < 1 || a_max > b_max) throw contract_error("audit: requires 0 <= a_max <= b_max");
    std::uint64_t ops = 0;
    std::vector<MissingExtension> missing;
    struct enough_collected {};

    std::optional<std::vector<char>> closed_mask;
    if (d.kind == ClassKind::Predimension) {
        if (g.size() > 20) throw resource_error("audit: predimension closedness table capped at 20 vertices");
        closed_mask = closed_subset_table(g, *d.alpha, d.closure);
    }

    try {
    for (int s = 0; s <= std::min(a_max, g.size()); ++s) {
        enumerate_subsets(g.size(), s, [&](const std::vector<int>& base) {
            if (ops > node_budget) throw resource_error("audit: node budget exceeded");
            if (closed_mask) {
                std::size_t mask = 0;
                for (int v : base) mask |= (std::size_t(1) << v);
                if (!(*closed_mask)[mask]) return;  // only closed bases carry axioms
            }
            auto cand = trace_candidates(g, base);
            for (int m = 1; m + s <= b_max; ++m) {
                for (const auto& pat : canonical_patterns(s, m, ops)) {
                    ++ops;
                    Graph b = build_extension_graph(g, base, pat);
                    if (!class_member(d, b)) continue;
                    if (d.kind == ClassKind::Predimension) {
                        // axiom requires A closed in B
                        VertexSet a_in_b(b.size());
                        for (int i = 0; i < s; ++i) a_in_b.set(i);
                        if (!is_closed(a_in_b, b, *d.alpha, d.closure).closed) continue;
                    }
                    if (!extension_realized(g, d, base, pat, cand, closed_mask ? &*closed_mask : nullptr, ops)) {
                        missing.push_back(MissingExtension{base, pat});
                        if (max_missing && missing.size() >= max_missing) throw enough_collected{};
                    }
                }
            }
        });
    }
    } catch (const enough_collected&) {
    }
    return missing;
}

namespace {

// Appends the pattern over `base` to g; returns the new vertex ids.
std::vector<int> realize_pattern(Graph& g, const std::vector<int>& base, const ExtensionPattern& pat) {
    int n = g.size();
    int m = pat.new_count();
    Graph bigger(n + m);
    for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
    if (g.has_labels())
        for (int v = 0; v < n; ++v)
            if (!g.labels()[static_cast<std::size_t>(v)].empty()) bigger.set_label(v, g.labels()[static_cast<std::size_t>(v)]);
    std::vector<int> fresh;
    for (int i = 0; i < m; ++i) {
        int nv = n + i;
        fresh.push_back(nv);
        for (int j = 0; j < static_cast<int>(base.size()); ++j)
            if ((pat.traces[static_cast<std::size_t>(i)] >> j) & 1ull) bigger.add_edge(nv, base[static_cast<std::size_t>(j)]);
        for (int j = 0; j < i; ++j)
            if ((pat.overlay[static_cast<std::size_t>(i)] >> j) & 1ull) bigger.add_edge(nv, n + j);
    }
    g = std::move(bigger);
    return fresh;
}

std::string base_string(const std::vector<int>& base) {
    std::string s = "{";
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(base[i]);
    }
    return s + "}";
}

}  // namespace

GrowResult grow_generic(const ClassDescriptor& d, int budget, int size_cap, std::uint64_t seed,
                        const GrowOptions& opts, const Graph* start, const GrowthLog* start_log) {
    if (budget < 1 || size_cap < 1) throw contract_error("grow_generic: budget and size_cap must be positive");
    int a_max = std::min(opts.audit_a_max, size_cap - 1);
    int b_max = std::min(opts.audit_b_max, size_cap);

    GrowResult res;
    res.graph = start ? *start : Graph(0);
    if (start && !class_member(d, res.graph)) throw contract_error("grow_generic: start graph is not in the class");
    if (start_log) res.log = *start_log;
    res.log.seed = seed;

    auto log_step = [&](const std::string& what) {
        GrowthStep st;
        st.description = what;
        st.size = res.graph.size();
        st.edges = res.graph.edge_count();
        res.log.steps.push_back(std::move(st));
    };

    std::vector<MissingExtension> queue;
    int steps = 0;
    while (steps < budget) {
        if (queue.empty()) {
            queue = audit_extension_axioms(res.graph, d, a_max, b_max, opts.audit_node_budget, 50000);
            if (queue.empty()) {
                res.saturated = true;
                res.log.note = "saturated: audit clean at (" + std::to_string(a_max) + "," + std::to_string(b_max) + ")";
                break;
            }
            // one-vertex extensions batch and keep the graph small; while any
            // are missing, wider extensions wait for the next round
            bool any_single = false;
            for (const auto& m : queue)
                if (m.pattern.new_count() == 1) {
                    any_single = true;
                    break;
                }
            if (any_single) {
                std::vector<MissingExtension> singles;
                for (auto& m : queue)
                    if (m.pattern.new_count() == 1) singles.push_back(std::move(m));
                queue = std::move(singles);
            }
            // one-vertex extensions first (they batch), then increasing |B|,
            // full traces ahead of partial ones, seeded shuffle within ties
            Xoshiro256 tie_rng = Xoshiro256::stream(seed, static_cast<std::uint64_t>(steps));
            tie_rng.shuffle(queue);
            auto popcount_trace = [](const MissingExtension& m) {
                int c = 0;
                for (auto t : m.pattern.traces) c += std::popcount(t);
                return c;
            };
            std::stable_sort(queue.begin(), queue.end(), [&](const MissingExtension& x, const MissingExtension& y) {
                auto kx = std::make_tuple(x.pattern.traces.size(), x.base.size() + x.pattern.traces.size(),
                                          -popcount_trace(x));
                auto ky = std::make_tuple(y.pattern.traces.size(), y.base.size() + y.pattern.traces.size(),
                                          -popcount_trace(y));
                return kx < ky;
            });
        }
        MissingExtension ax = queue.front();
        queue.erase(queue.begin());

        // the graph may have grown since the audit ran
        {
            std::uint64_t ops = 0;
            auto cand = trace_candidates(res.graph, ax.base);
            const std::vector<char>* cm = nullptr;
            std::vector<char> table;
            if (d.kind == ClassKind::Predimension) {
                table = closed_subset_table(res.graph, *d.alpha, d.closure);
                cm = &table;
            }
            if (extension_realized(res.graph, d, ax.base, ax.pattern, cand, cm, ops)) continue;
        }

        if (d.kind == ClassKind::Predimension &&
            res.graph.size() + ax.pattern.new_count() > opts.predimension_size_cap) {
            res.log.note = "stopped: predimension verification cap reached";
            break;
        }

        // cover batching: pending one-vertex extensions merge into a single
        // realization adjacent to the union of positive trace sides and away
        // from the negative sides; absorbed queue entries are skipped later by
        // the realized re-check
        bool batched = false;
        int batch_cap = std::min({opts.batch_limit, size_cap - 1, 63});
        if (opts.cover_batching && d.kind != ClassKind::Predimension && ax.pattern.new_count() == 1 &&
            !ax.base.empty() && static_cast<int>(ax.base.size()) <= batch_cap) {
            BitRow pos(res.graph.size()), neg(res.graph.size());
            BitRow pos_nbrs(res.graph.size());  // CliqueFree: neighbors of the positive side
            auto absorb = [&](const std::vector<int>& base, std::uint64_t trace) -> bool {
                BitRow p(res.graph.size()), q(res.graph.size());
                for (std::size_t i = 0; i < base.size(); ++i)
                    ((trace >> i) & 1ull ? p : q).set(base[i]);
                if (p.intersects(neg) || q.intersects(pos)) return false;
                BitRow np = pos, nq = neg;
                np |= p;
                nq |= q;
                if (np.intersects(nq)) return false;
                if (np.count() + nq.count() > batch_cap) return false;
                if (d.kind == ClassKind::CliqueFree) {
                    // the positive side must stay independent
                    BitRow fresh = p;
                    fresh.and_not(pos);
                    if (fresh.intersects(pos_nbrs)) return false;
                    for (int v = fresh.next_bit(0); v >= 0; v = fresh.next_bit(v + 1))
                        if (fresh.count_and(res.graph.neighbors(v)) > 0) return false;
                    for (int v = fresh.next_bit(0); v >= 0; v = fresh.next_bit(v + 1))
                        pos_nbrs |= res.graph.neighbors(v);
                }
                pos = np;
                neg = nq;
                return true;
            };
            if (absorb(ax.base, ax.pattern.traces[0])) {
                std::size_t scanned = 0;
                for (const auto& other : queue) {
                    if (++scanned > 20000 || pos.count() + neg.count() >= batch_cap) break;
                    if (other.pattern.new_count() != 1 || other.base.empty()) continue;
                    absorb(other.base, other.pattern.traces[0]);
                }
                BitRow both = pos;
                both |= neg;
                std::vector<int> base_list = both.to_vector();
                ExtensionPattern merged;
                merged.base_size = static_cast<int>(base_list.size());
                std::uint64_t trace = 0;
                for (std::size_t i = 0; i < base_list.size(); ++i)
                    if (pos.test(base_list[i])) trace |= (1ull << i);
                merged.traces = {trace};
                merged.overlay = {0};
                Graph check = build_extension_graph(res.graph, base_list, merged);
                if (class_member(d, check)) {
                    realize_pattern(res.graph, base_list, merged);
                    log_step("ext base=" + base_string(base_list) + " pat=" + merged.describe() + " (batched)");
                    batched = true;
                }
            }
        }
        if (!batched) {
            realize_pattern(res.graph, ax.base, ax.pattern);
            log_step("ext base=" + base_string(ax.base) + " pat=" + ax.pattern.describe());
        }

        // membership must survive every step
        if (d.kind == ClassKind::CliqueFree && has_clique_of_size(res.graph, d.forbidden_clique))
            throw structural_error("grow_generic: realization created a forbidden clique");
        if (d.kind == ClassKind::Predimension && !in_k_alpha(res.graph, *d.alpha).member)
            throw structural_error("grow_generic: realization left K_alpha");
        if (opts.log_chi && !res.log.steps.empty()) {
            res.log.steps.back().chi = chromatic_number(res.graph).number;
            res.log.steps.back().omega = clique_number(res.graph);
        }
        ++steps;
    }
    if (steps >= budget && res.log.note.empty()) res.log.note = "stopped: budget exhausted";
    return res;
}

EmbedResult embed_target(const Graph& g, const ClassDescriptor& d, const Graph& target, GrowthLog* log) {
    if (target.size() > 64) throw resource_error("embed_target: targets beyond 64 vertices are unsupported");
    if (!class_member(d, target)) throw contract_error("embed_target: target is not in the class");
    EmbedResult res;
    res.graph = g;
    if (auto existing = find_induced_embedding(target, g)) {
        res.embedding = *existing;
        return res;
    }
    // realize target vertices in index order over the partial image; each new
    // vertex is an extension axiom over the image placed so far
    std::vector<int> image;
    for (int t = 0; t < target.size(); ++t) {
        // base = whole current image, trace bits follow target adjacency
        std::vector<int> base = image;
        ExtensionPattern pat;
        pat.base_size = static_cast<int>(base.size());
        std::uint64_t trace = 0;
        for (int j = 0; j < t; ++j)
            if (target.adjacent(t, j)) trace |= (1ull << j);
        pat.traces = {trace};
        pat.overlay = {0};
        auto fresh = realize_pattern(res.graph, base, pat);
        image.push_back(fresh[0]);
        ++res.steps_added;
        if (log) {
            GrowthStep st;
            st.description = "embed v" + std::to_string(t) + " base=" + base_string(base);
            st.size = res.graph.size();
            st.edges = res.graph.edge_count();
            log->steps.push_back(std::move(st));
        }
    }
    res.embedding.map = image;
    if (!is_induced_embedding(target, res.graph, res.embedding))
        throw structural_error("embed_target: staged realization failed to embed the target");
    if (d.kind == ClassKind::CliqueFree && has_clique_of_size(res.graph, d.forbidden_clique))
        throw structural_error("embed_target: extension created a forbidden clique");
    if (d.kind == ClassKind::Predimension) {
        if (!in_k_alpha(res.graph, *d.alpha).member)
            throw structural_error("embed_target: extension left K_alpha");
        if (res.graph.size() - target.size() <= 24) {
            VertexSet img(res.graph.size());
            for (int v : image) img.set(v);
            res.image_closed = is_closed(img, res.graph, *d.alpha, d.closure).closed;
        }
    }
    return res;
}

HomogeneityResult check_homogeneity(const Graph& g, int k) {
    if (k < 1) throw contract_error("check_homogeneity: k must be positive");
    HomogeneityResult res;
    int n = g.size();
    for (int s = 1; s <= std::min(k, n); ++s) {
        std::vector<std::vector<int>> subsets;
        enumerate_subsets(n, s, [&](const std::vector<int>& sub) { subsets.push_back(sub); });
        // all ordered injections between subset pairs that are partial isos
        std::vector<int> perm(static_cast<std::size_t>(s));
        for (std::size_t si = 0; si < subsets.size(); ++si) {
            for (std::size_t ti = si; ti < subsets.size(); ++ti) {
                const auto& S = subsets[si];
                const auto& T = subsets[ti];
                for (int i = 0; i < s; ++i) perm[static_cast<std::size_t>(i)] = i;
                do {
                    bool iso = true;
                    for (int i = 0; i < s && iso; ++i)
                        for (int j = i + 1; j < s && iso; ++j)
                            if (g.adjacent(S[static_cast<std::size_t>(i)], S[static_cast<std::size_t>(j)]) !=
                                g.adjacent(T[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                           T[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]))
                                iso = false;
                    if (!iso) continue;
                    std::vector<int> pinned(static_cast<std::size_t>(n), -1);
                    bool trivial = true;
                    for (int i = 0; i < s; ++i) {
                        pinned[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])] =
                            T[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                        if (pinned[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])] != S[static_cast<std::size_t>(i)])
                            trivial = false;
                    }
                    if (trivial) continue;  // identity extends by the identity
                    if (!find_induced_embedding(g, g, pinned, true)) {
                        res.homogeneous = false;
                        res.source = S;
                        res.target.clear();
                        res.map.clear();
                        for (int i = 0; i < s; ++i) {
                            res.target.push_back(T[static_cast<std::size_t>(i)]);
                            res.map.push_back(T[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
                        }
                        return res;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    return res;
}

bool has_fap_instance(const ClassDescriptor& d, const Graph& a, const Graph& b, const Graph& c,
                      const Embedding& a_into_b, const Embedding& a_into_c) {
    if (!class_member(d, b)) throw contract_error("has_fap_instance: B is not in the class");
    if (!class_member(d, c)) throw contract_error("has_fap_instance: C is not in the class");
    if (d.kind == ClassKind::Predimension) {
        VertexSet ab(b.size());
        for (int v : a_into_b.map) ab.set(v);
        VertexSet ac(c.size());
        for (int v : a_into_c.map) ac.set(v);
        if (!class_closed_in(d, ab, b)) throw contract_error("has_fap_instance: A is not closed in B");
        if (!class_closed_in(d, ac, c)) throw contract_error("has_fap_instance: A is not closed in C");
    }
    AmalgamResult am = free_amalgam(a, b, c, a_into_b, a_into_c);
    if (!class_member(d, am.graph)) return false;
    if (d.kind == ClassKind::Predimension) {
        VertexSet bimg(am.graph.size());
        for (int v : am.b_into_result.map) bimg.set(v);
        VertexSet cimg(am.graph.size());
        for (int v : am.c_into_result.map) cimg.set(v);
        if (!class_closed_in(d, bimg, am.graph)) return false;
        if (!class_closed_in(d, cimg, am.graph)) return false;
    }
    return true;
}

}  // namespace amalgam
