#include "amalgam/predimension.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "amalgam/mycielski.hpp"

namespace amalgam {

Rational delta(const Graph& g, const Alpha& alpha) {
    return Rational(g.size()) - alpha.value * Rational(g.edge_count());
}

Rational delta_of_subset(const Graph& g, const VertexSet& s, const Alpha& alpha) {
    long long edges = 0;
    for (int v = s.next_bit(0); v >= 0; v = s.next_bit(v + 1)) edges += g.neighbors(v).count_and(s);
    edges /= 2;
    return Rational(s.count()) - alpha.value * Rational(edges);
}

namespace {

// score(S) = den*|S| - num*e(S); delta >= 0 iff score >= 0.
template <typename Int>
struct SubsetScan {
    const Graph& g;
    Int num, den;
    std::vector<Int> slack;  // suffix sums of max(0, num*deg(v) - den): max possible future decrease

    Int best_score;
    BitRow best_set;
    bool have_best = false;

    SubsetScan(const Graph& graph, Int p, Int q) : g(graph), num(p), den(q), best_score(0), best_set(graph.size()) {
        slack.assign(static_cast<std::size_t>(g.size()) + 1, Int(0));
        for (int v = g.size() - 1; v >= 0; --v) {
            Int d = num * Int(g.degree(v)) - den;
            slack[static_cast<std::size_t>(v)] = slack[static_cast<std::size_t>(v) + 1] + (d > 0 ? d : Int(0));
        }
    }

    void consider(Int score, const BitRow& set) {
        if (!have_best || score < best_score || (score == best_score && set.lex_less(best_set))) {
            best_score = score;
            best_set = set;
            have_best = true;
        }
    }

    // Enumerates supersets of `base` by adding vertices from `pool` with index
    // >= from; `score` is the running score of `cur`. Tracks the minimum over
    // all proper extensions (min_proper) or all visited sets per caller usage.
    void dfs(BitRow& cur, Int score, int from, const BitRow& pool) {
        for (int v = pool.next_bit(from); v >= 0; v = pool.next_bit(v + 1)) {
            Int next_score = score + den - num * Int(g.neighbors(v).count_and(cur));
            cur.set(v);
            consider(next_score, cur);
            // prune: even the largest possible decrease cannot beat the best
            if (!(next_score - slack[static_cast<std::size_t>(v) + 1] > best_score))
                dfs(cur, next_score, v + 1, pool);
            cur.reset(v);
        }
    }
};

template <typename Int>
MembershipResult membership_impl(const Graph& g, Int p, Int q) {
    SubsetScan<Int> scan(g, p, q);
    BitRow cur(g.size());
    scan.dfs(cur, Int(0), 0, g.full_set());
    MembershipResult res;
    if (!scan.have_best) {  // no vertices: empty graph
        res.member = true;
        res.min_delta = 0;
        res.violating = BitRow(g.size());
        return res;
    }
    res.min_delta = Rational(BigInt(scan.best_score), BigInt(q));
    res.member = scan.best_score >= 0;
    res.violating = res.member ? BitRow(g.size()) : scan.best_set;
    return res;
}

template <typename Int>
ClosednessResult closedness_impl(const VertexSet& a, const Graph& b, Closedness kind, Int p, Int q) {
    // score of a
    Int base = 0;
    {
        long long edges = 0;
        for (int v = a.next_bit(0); v >= 0; v = a.next_bit(v + 1)) edges += b.neighbors(v).count_and(a);
        edges /= 2;
        base = q * Int(a.count()) - p * Int(edges);
    }
    BitRow pool = b.full_set();
    pool.and_not(a);

    SubsetScan<Int> scan(b, p, q);
    BitRow cur = a;
    scan.dfs(cur, base, 0, pool);

    ClosednessResult res;
    res.delta_base = Rational(BigInt(base), BigInt(q));
    if (!scan.have_best) {  // a == b: no proper supersets
        res.closed = true;
        res.violating = BitRow(b.size());
        res.delta_min = res.delta_base;
        return res;
    }
    res.delta_min = Rational(BigInt(scan.best_score), BigInt(q));
    res.closed = kind == Closedness::Weak ? base <= scan.best_score : base < scan.best_score;
    res.violating = res.closed ? BitRow(b.size()) : scan.best_set;
    return res;
}

}  // namespace

MembershipResult in_k_alpha(const Graph& g, const Alpha& alpha) {
    if (g.size() > 26) throw resource_error("in_k_alpha: exhaustive subset scan capped at 26 vertices");
    if (alpha.fits_int64()) return membership_impl<long long>(g, alpha.num(), alpha.den());
    return membership_impl<BigInt>(g, numerator(alpha.value), denominator(alpha.value));
}

ClosednessResult is_closed(const VertexSet& a, const Graph& b, const Alpha& alpha, Closedness kind) {
    if (a.capacity() != b.size()) throw structural_error("is_closed: vertex set capacity mismatch");
    if (b.size() - a.count() > 24) throw resource_error("is_closed: exhaustive superset scan capped at 24 free vertices");
    if (alpha.fits_int64()) return closedness_impl<long long>(a, b, kind, alpha.num(), alpha.den());
    return closedness_impl<BigInt>(a, b, kind, numerator(alpha.value), denominator(alpha.value));
}

bool all_subsets_closed(const Graph& g, const Alpha& alpha, Closedness kind, VertexSet* violating) {
    int n = g.size();
    if (n > 20) throw resource_error("all_subsets_closed: DP capped at 20 vertices");
    if (!alpha.fits_int64()) throw resource_error("all_subsets_closed: alpha numerator/denominator too large");
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
    // min over supersets, then check each subset against its proper supersets
    std::vector<long long> msup = score;
    for (std::size_t s = full; s-- > 0;) {
        for (int i = 0; i < n; ++i) {
            std::size_t t = s | (std::size_t(1) << i);
            if (t != s) msup[s] = std::min(msup[s], msup[t]);
        }
    }
    for (std::size_t s = 0; s < full; ++s) {
        long long proper_min = std::numeric_limits<long long>::max();
        for (int i = 0; i < n; ++i) {
            std::size_t t = s | (std::size_t(1) << i);
            if (t != s) proper_min = std::min(proper_min, msup[t]);
        }
        if (proper_min == std::numeric_limits<long long>::max()) continue;  // s is the full set
        bool ok = kind == Closedness::Weak ? score[s] <= proper_min : score[s] < proper_min;
        if (!ok) {
            if (violating) {
                BitRow bs(n);
                for (int i = 0; i < n; ++i)
                    if (s & (std::size_t(1) << i)) bs.set(i);
                *violating = bs;
            }
            return false;
        }
    }
    return true;
}

std::optional<int> min_degree_vertex_below(const Graph& g, int k_star) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) < k_star) return v;
    return std::nullopt;
}

KstarOutcome kstar_coloring(const Graph& g, const Alpha& alpha, int k_star, bool check_membership) {
    if (k_star < 1) throw contract_error("kstar_coloring: k_star must be positive");
    // alpha * k_star > 2 as exact rationals: p*k_star > 2q
    if (!(numerator(alpha.value) * k_star > 2 * denominator(alpha.value)))
        throw contract_error("kstar_coloring: requires alpha * k_star > 2");
    if (check_membership) {
        MembershipResult m = in_k_alpha(g, alpha);
        if (!m.member) throw contract_error("kstar_coloring: graph is not in K_alpha");
    }

    KstarOutcome out;
    out.violating = BitRow(g.size());
    BitRow remaining = g.full_set();
    std::vector<int> elimination;
    int left = g.size();
    while (left > 0) {
        int pick = -1;
        for (int v = remaining.next_bit(0); v >= 0; v = remaining.next_bit(v + 1)) {
            if (g.neighbors(v).count_and(remaining) < k_star) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            out.violating = remaining;  // every vertex has degree >= k* here, so delta < 0
            return out;
        }
        elimination.push_back(pick);
        remaining.reset(pick);
        --left;
    }
    out.coloring = greedy_color_with_order(g, elimination);
    return out;
}

bool closedness_by_degree(const VertexSet& a_sub, const Graph& a, const Alpha& alpha) {
    int max_deg = a.max_degree();
    // alpha < 1/max_deg exactly: p*max_deg < q (vacuous for edgeless graphs)
    if (max_deg > 0 && !(numerator(alpha.value) * max_deg < denominator(alpha.value)))
        throw contract_error("closedness_by_degree: requires alpha < 1/max_degree");
    return is_closed(a_sub, a, alpha, Closedness::Strict).closed;
}

MycielskianClassResult mycielskian_in_class(const Graph& a, const Alpha& alpha, Closedness kind) {
    (void)kind;  // membership in K_alpha does not depend on the closure notion
    MembershipResult base = in_k_alpha(a, alpha);
    if (!base.member) throw contract_error("mycielskian_in_class: input graph is not in K_alpha");
    MycielskiResult m = mycielskian(a);
    MycielskianClassResult res;
    res.myc_max_degree = m.graph.max_degree();
    res.lemma_applies =
        res.myc_max_degree == 0 || numerator(alpha.value) * res.myc_max_degree < denominator(alpha.value);
    res.in_class = in_k_alpha(m.graph, alpha).member;
    return res;
}

EpsilonResult lower_bound_epsilon(int n) {
    if (n < 1) throw contract_error("lower_bound_epsilon: n must be positive");
    EpsilonResult res;
    if (n == 1) {  // a single vertex already forces one color; any alpha works
        res.witness = Graph(1);
        res.epsilon = 1;
        return res;
    }
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph w = k2;
    auto iterates = iterated_mycielskian(k2, n - 2);
    if (!iterates.empty()) w = iterates.back().graph;
    res.epsilon = Rational(1, w.max_degree());
    res.witness = std::move(w);
    return res;
}

}  // namespace amalgam
