#include "amalgam/witnesses.hpp"

#include <algorithm>

namespace amalgam {

bool verify_half_graph(const Graph& g, const HalfGraphWitness& w) {
    if (w.a_seq.size() != w.b_seq.size()) return false;
    std::vector<int> all;
    all.insert(all.end(), w.a_seq.begin(), w.a_seq.end());
    all.insert(all.end(), w.b_seq.begin(), w.b_seq.end());
    for (int v : all)
        if (v < 0 || v >= g.size()) return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    int k = static_cast<int>(w.a_seq.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.adjacent(w.a_seq[static_cast<std::size_t>(i)], w.b_seq[static_cast<std::size_t>(j)]) != (i < j))
                return false;
    return true;
}

namespace {

struct HalfGraphSearch {
    const Graph& g;
    int target;
    std::vector<int> a_seq, b_seq;
    BitRow used;

    HalfGraphSearch(const Graph& graph, int k) : g(graph), target(k), used(graph.size()) {}

    // Alternating extension: place a_t (no edges to b_1..b_{t-1}), then b_t
    // (edges to a_1..a_{t-1}, no edge to a_t).
    bool place_a(int t) {
        if (t == target) return true;
        BitRow cand = g.full_set();
        cand.and_not(used);
        for (int j = 0; j < t; ++j) cand.and_not(g.neighbors(b_seq[static_cast<std::size_t>(j)]));
        for (int v = cand.next_bit(0); v >= 0; v = cand.next_bit(v + 1)) {
            a_seq.push_back(v);
            used.set(v);
            if (place_b(t)) return true;
            used.reset(v);
            a_seq.pop_back();
        }
        return false;
    }

    bool place_b(int t) {
        BitRow cand = g.full_set();
        cand.and_not(used);
        for (int i = 0; i < t; ++i) cand &= g.neighbors(a_seq[static_cast<std::size_t>(i)]);
        cand.and_not(g.neighbors(a_seq[static_cast<std::size_t>(t)]));
        for (int v = cand.next_bit(0); v >= 0; v = cand.next_bit(v + 1)) {
            b_seq.push_back(v);
            used.set(v);
            if (place_a(t + 1)) return true;
            used.reset(v);
            b_seq.pop_back();
        }
        return false;
    }
};

}  // namespace

HalfGraphResult max_half_graph(const Graph& g, int k_cap) {
    HalfGraphResult res;
    int max_possible = std::min(k_cap, g.size() / 2);
    for (int k = max_possible; k >= 1; --k) {
        HalfGraphSearch s(g, k);
        if (s.place_a(0)) {
            res.order = k;
            res.witness.a_seq = std::move(s.a_seq);
            res.witness.b_seq = std::move(s.b_seq);
            if (!verify_half_graph(g, res.witness)) throw structural_error("half-graph witness failed verification");
            return res;
        }
    }
    return res;  // order 0: not even a non-adjacent pair
}

bool verify_shatter(const Graph& g, const ShatterWitness& w) {
    for (int v : w.base)
        if (v < 0 || v >= g.size()) return false;
    std::vector<int> sorted = w.base;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < w.base.size(); ++i)
        for (std::size_t j = i + 1; j < w.base.size(); ++j)
            if (g.adjacent(w.base[i], w.base[j])) return false;  // base must be edge-free
    std::size_t subsets = std::size_t(1) << w.base.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < w.base.size(); ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(w.base[i]);
        std::sort(subset.begin(), subset.end());
        auto it = w.realizers.find(subset);
        if (it == w.realizers.end()) return false;
        int r = it->second;
        if (r < 0 || r >= g.size()) return false;
        for (int d : w.base) {
            bool want = std::find(subset.begin(), subset.end(), d) != subset.end();
            if (d == r) {
                if (want) return false;  // irreflexive: a realizer cannot trace itself
                continue;
            }
            if (g.adjacent(r, d) != want) return false;
        }
    }
    return true;
}

namespace {

// Trace code of v on base (bit i set iff v ~ base[i]).
std::uint32_t trace_code(const Graph& g, const std::vector<int>& base, int v) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i] != v && g.adjacent(base[i], v)) code |= (1u << i);
    return code;
}

// Returns lexicographically-least realizers when the base is shattered.
bool shattered(const Graph& g, const std::vector<int>& base, std::vector<int>& realizer_by_code) {
    std::size_t want = std::size_t(1) << base.size();
    realizer_by_code.assign(want, -1);
    std::size_t found = 0;
    for (int v = 0; v < g.size() && found < want; ++v) {
        if (std::find(base.begin(), base.end(), v) != base.end()) {
            // base members are edge-free, so they trace the empty set
            if (realizer_by_code[0] < 0) {
                realizer_by_code[0] = v;
                ++found;
            }
            continue;
        }
        std::uint32_t code = trace_code(g, base, v);
        if (realizer_by_code[code] < 0) {
            realizer_by_code[code] = v;
            ++found;
        }
    }
    return found == want;
}

struct ShatterSearch {
    const Graph& g;
    int cap;
    std::vector<int> best_base;
    std::vector<int> best_realizers;

    ShatterSearch(const Graph& graph, int k_cap) : g(graph), cap(k_cap) {}

    // DFS over independent sets in ascending vertex order; a set is only
    // extended while it is itself fully shattered (shattering is hereditary).
    void dfs(std::vector<int>& base, int from) {
        for (int v = from; v < g.size(); ++v) {
            bool independent = true;
            for (int u : base)
                if (g.adjacent(u, v)) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            base.push_back(v);
            std::vector<int> realizers;
            if (shattered(g, base, realizers)) {
                if (base.size() > best_base.size()) {
                    best_base = base;
                    best_realizers = realizers;
                }
                if (static_cast<int>(base.size()) < cap) dfs(base, v + 1);
            }
            base.pop_back();
        }
    }
};

}  // namespace

ShatterResult max_shattered_set(const Graph& g, int k_cap) {
    if (k_cap > 20) throw resource_error("max_shattered_set: cap limited to 20");
    ShatterResult res;
    if (g.size() == 0 || k_cap < 1) return res;
    ShatterSearch s(g, k_cap);
    std::vector<int> base;
    s.dfs(base, 0);
    res.size = static_cast<int>(s.best_base.size());
    if (res.size > 0) {
        res.witness.base = s.best_base;
        std::size_t subsets = std::size_t(1) << res.size;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < res.size; ++i)
                if (mask & (std::size_t(1) << i)) subset.push_back(s.best_base[static_cast<std::size_t>(i)]);
            std::sort(subset.begin(), subset.end());
            res.witness.realizers[subset] = s.best_realizers[mask];
        }
        if (!verify_shatter(g, res.witness)) throw structural_error("shatter witness failed verification");
    }
    return res;
}

}  // namespace amalgam
