#include "amalgam/interval_cell.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace amalgam {

// --- PLFunction -------------------------------------------------------------

PLFunction PLFunction::from_points(std::vector<Rational> xs, std::vector<Rational> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw structural_error("PL function needs matching breakpoint/value lists (>= 2)");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) throw structural_error("PL breakpoints must be strictly increasing");
    PLFunction f;
    f.xs = std::move(xs);
    f.ys = std::move(ys);
    f.shape();  // validates monotone-or-constant
    return f;
}

PLFunction::Shape PLFunction::shape() const {
    bool inc = true, dec = true, conz = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (!(ys[i - 1] < ys[i])) inc = false;
        if (!(ys[i - 1] > ys[i])) dec = false;
        if (!(ys[i - 1] == ys[i])) conz = false;
    }
    if (conz) return Shape::Constant;
    if (inc) return Shape::Increasing;
    if (dec) return Shape::Decreasing;
    throw structural_error("PL function must be strictly monotone or constant");
}

Rational PLFunction::eval(const Rational& x) const {
    if (x < xs.front() || x > xs.back()) throw structural_error("PL evaluation outside domain");
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t seg = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
    if (seg + 1 >= xs.size()) seg = xs.size() - 2;
    const Rational& x0 = xs[seg];
    const Rational& x1 = xs[seg + 1];
    const Rational& y0 = ys[seg];
    const Rational& y1 = ys[seg + 1];
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rational PLFunction::min_value() const { return *std::min_element(ys.begin(), ys.end()); }
Rational PLFunction::max_value() const { return *std::max_element(ys.begin(), ys.end()); }

PLFunction PLFunction::restrict_to(const Rational& lo, const Rational& hi) const {
    if (lo < xs.front() || hi > xs.back() || !(lo < hi)) throw structural_error("PL restriction outside domain");
    PLFunction out;
    out.xs.push_back(lo);
    out.ys.push_back(eval(lo));
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] > lo && xs[i] < hi) {
            out.xs.push_back(xs[i]);
            out.ys.push_back(ys[i]);
        }
    out.xs.push_back(hi);
    out.ys.push_back(eval(hi));
    return out;
}

PLFunction PLFunction::max_with_const(const Rational& c) const {
    // collect original breakpoints plus exact crossings of each segment with c
    std::vector<Rational> nx, ny;
    auto push = [&](const Rational& x, const Rational& y) {
        if (!nx.empty() && nx.back() == x) return;
        nx.push_back(x);
        ny.push_back(y < c ? c : y);
    };
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        push(xs[i], ys[i]);
        const Rational &y0 = ys[i], &y1 = ys[i + 1];
        bool below0 = y0 < c, below1 = y1 < c;
        if (below0 != below1) {
            // crossing x* with f(x*) = c
            Rational t = (c - y0) / (y1 - y0);
            Rational xstar = xs[i] + t * (xs[i + 1] - xs[i]);
            if (xstar > xs[i] && xstar < xs[i + 1]) push(xstar, c);
        }
    }
    push(xs.back(), ys.back());
    PLFunction out;  // clipped maxima need not stay strictly monotone, so skip shape validation
    out.xs = std::move(nx);
    out.ys = std::move(ny);
    return out;
}

bool PLFunction::weakly_increasing() const {
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (ys[i - 1] > ys[i]) return false;
    return true;
}

bool PLFunction::strictly_increasing() const {
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (!(ys[i - 1] < ys[i])) return false;
    return true;
}

std::optional<Rational> PLFunction::increasing_preimage(const Rational& y) const {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational &y0 = ys[i], &y1 = ys[i + 1];
        if (!(y0 < y1)) continue;  // flat or decreasing pieces carry no unique preimage
        if (y >= y0 && y <= y1) {
            Rational t = (y - y0) / (y1 - y0);
            return xs[i] + t * (xs[i + 1] - xs[i]);
        }
    }
    return std::nullopt;
}

// --- CellSpec ----------------------------------------------------------------

void CellSpec::validate() const {
    if (!(d0 < e0)) throw structural_error("cell requires d0 < e0");
    if (!(d <= d0)) throw structural_error("cell requires d <= d0");
    if (f.xs.front() != d0 || f.xs.back() != e0 || g.xs.front() != d0 || g.xs.back() != e0)
        throw structural_error("cell bound functions must span [d0, e0]");
    f.shape();
    g.shape();
    // f < g on the open interval: compare at all merged breakpoints
    std::vector<Rational> merged = f.xs;
    merged.insert(merged.end(), g.xs.begin(), g.xs.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (const Rational& x : merged) {
        Rational fv = f.eval(x), gv = g.eval(x);
        bool interior = x > d0 && x < e0;
        if (interior && !(fv < gv)) throw structural_error("cell requires f < g on (d0, e0), violated at x=" + format_rational(x));
        if (!interior && fv > gv) throw structural_error("cell requires f <= g at the interval endpoints");
        if (interior && !(gv < x) && !(gv == x)) throw structural_error("cell requires g(x) <= x, violated at x=" + format_rational(x));
        if (!interior && gv > x) throw structural_error("cell requires g(x) <= x, violated at x=" + format_rational(x));
        if (fv < d) throw structural_error("cell requires f >= d, violated at x=" + format_rational(x));
    }
}

bool CellSpec::cell_edge(const Rational& x, const Rational& y) const {
    if (!(x > d0 && x < e0)) return false;
    Rational fv = f.eval(x), gv = g.eval(x);
    return fv < y && y < gv;
}

CellSpec parse_cellspec_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw structural_error(std::string("bad cell spec JSON: ") + e.what());
    }
    auto rat = [&](const nlohmann::json& v) -> Rational {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        return parse_rational(v.get<std::string>());
    };
    auto pl = [&](const nlohmann::json& v) -> PLFunction {
        std::vector<Rational> xs, ys;
        for (const auto& b : v.at("breakpoints")) xs.push_back(rat(b));
        for (const auto& b : v.at("values")) ys.push_back(rat(b));
        return PLFunction::from_points(std::move(xs), std::move(ys));
    };
    CellSpec spec;
    try {
        spec.d0 = rat(j.at("d0"));
        spec.e0 = rat(j.at("e0"));
        spec.d = rat(j.at("d"));
        spec.f = pl(j.at("f"));
        spec.g = pl(j.at("g"));
    } catch (const nlohmann::json::exception& e) {
        throw structural_error(std::string("bad cell spec JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

std::string cellspec_to_json(const CellSpec& spec) {
    nlohmann::ordered_json j;
    j["d0"] = format_rational(spec.d0);
    j["e0"] = format_rational(spec.e0);
    j["d"] = format_rational(spec.d);
    auto dump_pl = [](const PLFunction& f) {
        nlohmann::ordered_json o;
        auto bs = nlohmann::ordered_json::array();
        auto vs = nlohmann::ordered_json::array();
        for (const auto& x : f.xs) bs.push_back(format_rational(x));
        for (const auto& y : f.ys) vs.push_back(format_rational(y));
        o["breakpoints"] = std::move(bs);
        o["values"] = std::move(vs);
        return o;
    };
    j["f"] = dump_pl(spec.f);
    j["g"] = dump_pl(spec.g);
    return j.dump(2);
}

// --- analysis ----------------------------------------------------------------

namespace {

// Fixed structure of g on (d0, e0): identity segments and isolated points.
struct FixedPoints {
    std::vector<std::pair<Rational, Rational>> segments;  // g == x on [a, b], a < b
    std::vector<Rational> isolated;
};

FixedPoints fixed_points_of(const PLFunction& g, const Rational& d0, const Rational& e0) {
    FixedPoints out;
    for (std::size_t i = 0; i + 1 < g.xs.size(); ++i) {
        const Rational &x0 = g.xs[i], &x1 = g.xs[i + 1];
        const Rational &y0 = g.ys[i], &y1 = g.ys[i + 1];
        // h(x) = g(x) - x is linear on the segment
        Rational h0 = y0 - x0, h1 = y1 - x1;
        if (h0 == 0 && h1 == 0) {
            Rational a = std::max(x0, d0), b = std::min(x1, e0);
            if (a < b) out.segments.emplace_back(a, b);
            continue;
        }
        if (h0 == 0) {
            if (x0 > d0 && x0 < e0) out.isolated.push_back(x0);
            continue;
        }
        if (h1 == 0) continue;  // recorded as the next segment's left endpoint; e0 itself lies outside
        if ((h0 < 0) != (h1 < 0)) {
            Rational t = (Rational(0) - h0) / (h1 - h0);
            Rational xstar = x0 + t * (x1 - x0);
            if (xstar > d0 && xstar < e0 && xstar > x0 && xstar < x1) out.isolated.push_back(xstar);
        }
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    out.isolated.erase(std::unique(out.isolated.begin(), out.isolated.end()), out.isolated.end());
    return out;
}

std::vector<Rational> probe_set(const PLFunction& f, const PLFunction& g, const Rational& lo, const Rational& hi) {
    std::vector<Rational> pts = f.xs;
    pts.insert(pts.end(), g.xs.begin(), g.xs.end());
    pts.push_back(lo);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> probes;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] >= hi || pts[i + 1] <= lo) continue;
        probes.push_back((std::max(pts[i], lo) + std::min(pts[i + 1], hi)) / 2);
    }
    for (const Rational& x : pts)
        if (x > lo && x < hi) probes.push_back(x);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    return probes;
}

}  // namespace

std::string CellVerdict::describe() const {
    switch (branch) {
        case CellBranch::CliqueIdentitySegment:
            return "clique (identity segment (" + format_rational(seg_a) + ", " + format_rational(seg_b) + "))";
        case CellBranch::CliqueOrbit:
            return "clique (orbit of " + format_rational(orbit_probe) + " stays above f*)";
        case CellBranch::BipartiteShortcut:
            return "bipartite (g never clears d0)";
        case CellBranch::BoundedColoring:
            return "coloring with at most " + std::to_string(2 * big_n) + " colors (N=" + std::to_string(big_n) + ")";
    }
    return "?";
}

CellVerdict analyze_cell(const CellSpec& spec, int orbit_cap) {
    spec.validate();
    CellVerdict v;
    v.original = spec;
    v.lo = spec.d0;
    v.hi = spec.e0;

    // Claim A: an identity segment of g plus a stretch where f stays below its
    // left end yields arbitrarily large cliques.
    FixedPoints fps = fixed_points_of(spec.g, spec.d0, spec.e0);
    if (!fps.segments.empty()) {
        auto [s, t] = fps.segments.front();
        Rational a = (s + t) / 2;  // interior point of the identity segment
        // largest b <= t with f < a on (a, b); f(a) < g(a) = a so b > a
        Rational b = t;
        // f is monotone or constant: crossing of f with level a, if any, is unique
        for (std::size_t i = 0; i + 1 < spec.f.xs.size(); ++i) {
            const Rational &y0 = spec.f.ys[i], &y1 = spec.f.ys[i + 1];
            if ((y0 < a) == (y1 < a)) continue;
            Rational tt = (a - y0) / (y1 - y0);
            Rational xstar = spec.f.xs[i] + tt * (spec.f.xs[i + 1] - spec.f.xs[i]);
            if (xstar > a && xstar < b) b = xstar;
        }
        v.branch = CellBranch::CliqueIdentitySegment;
        v.seg_a = a;
        v.seg_b = b;
        return v;
    }

    // restrict to the rightmost maximal fixed-point-free subinterval
    v.fixed_points = fps.isolated;
    if (!fps.isolated.empty()) v.lo = fps.isolated.back();
    CellSpec cell = spec;
    cell.d0 = v.lo;
    cell.f = spec.f.restrict_to(v.lo, v.hi);
    cell.g = spec.g.restrict_to(v.lo, v.hi);

    // Claim B: if g never clears the left endpoint the cell is bipartite
    if (cell.g.max_value() <= v.lo) {
        v.branch = CellBranch::BipartiteShortcut;
        return v;
    }
    if (!cell.g.strictly_increasing())
        throw structural_error("cell analysis: g must be strictly increasing once it clears d0");

    PLFunction fs = cell.f.max_with_const(v.lo);
    PLFunction gs = cell.g.max_with_const(v.lo);
    if (!fs.weakly_increasing()) throw structural_error("cell analysis: f* failed to be weakly increasing");
    if (!gs.weakly_increasing()) throw structural_error("cell analysis: g* failed to be weakly increasing");
    v.f_star = fs;
    v.g_star = gs;

    // orbit test over the probe set
    std::vector<Rational> probes = probe_set(cell.f, cell.g, v.lo, v.hi);
    int best_len = 0;
    Rational best_probe;
    bool have_best = false;
    for (const Rational& c : probes) {
        Rational floor_c = fs.eval(c);
        Rational y = c;
        int len = 0;
        while (y > floor_c) {
            if (len >= orbit_cap) {
                v.branch = CellBranch::CliqueOrbit;
                v.orbit_probe = c;
                return v;
            }
            y = gs.eval(y);
            ++len;
        }
        if (len > best_len || (len == best_len && have_best && c < best_probe)) {
            best_len = len;
            best_probe = c;
            have_best = true;
        } else if (!have_best) {
            best_len = len;
            best_probe = c;
            have_best = true;
        }
    }
    v.branch = CellBranch::BoundedColoring;
    v.big_n = best_len;
    v.ref_point = best_probe;
    return v;
}

Graph materialize_sample(const CellSpec& spec, const std::vector<Rational>& points) {
    for (const Rational& p : points)
        if (!(p > spec.d0 && p < spec.e0)) throw structural_error("sample point outside (d0, e0)");
    std::vector<Rational> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw structural_error("duplicate sample points rejected");
    int n = static_cast<int>(points.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational& x = std::max(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
            const Rational& y = std::min(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
            if (spec.cell_edge(x, y)) g.add_edge(i, j);
        }
    return g;
}

namespace {

void check_magnitude(const Rational& q, long long max_bits) {
    if (static_cast<long long>(msb(numerator(q) == 0 ? BigInt(1) : abs(numerator(q)))) > max_bits ||
        static_cast<long long>(msb(abs(denominator(q)))) > max_bits)
        throw resource_error("emit_clique: rational magnitude exceeds the configured bit bound");
}

}  // namespace

std::vector<Rational> emit_clique(const CellVerdict& verdict, int k, long long max_bits) {
    if (k < 1) throw contract_error("emit_clique: k must be positive");
    std::vector<Rational> pts;
    const CellSpec& cell = verdict.original;
    if (verdict.branch == CellBranch::CliqueIdentitySegment) {
        const Rational &a = verdict.seg_a, &b = verdict.seg_b;
        for (int i = 1; i <= k; ++i) pts.push_back(a + (b - a) * Rational(i, k + 1));
        std::reverse(pts.begin(), pts.end());  // descending like the orbit case
    } else if (verdict.branch == CellBranch::CliqueOrbit) {
        const PLFunction& fs = *verdict.f_star;
        const PLFunction& gs = *verdict.g_star;
        Rational floor_c = fs.eval(verdict.orbit_probe);
        Rational q = verdict.orbit_probe;
        pts.push_back(q);
        for (int i = 1; i < k; ++i) {
            q = (floor_c + gs.eval(q)) / 2;
            check_magnitude(q, max_bits);
            pts.push_back(q);
        }
    } else {
        throw contract_error("emit_clique: verdict is not a clique builder");
    }
    // mandatory definitional verification
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Rational& x = std::max(pts[i], pts[j]);
            const Rational& y = std::min(pts[i], pts[j]);
            if (!cell.cell_edge(x, y)) throw structural_error("emit_clique: emitted points failed pairwise verification");
        }
    return pts;
}

int color_point(const CellVerdict& verdict, const Rational& u) {
    if (verdict.branch != CellBranch::BoundedColoring) throw contract_error("color_point: verdict has no coloring");
    if (!(u > verdict.lo && u < verdict.hi)) throw structural_error("color_point: point outside the analyzed interval");
    const PLFunction& fs = *verdict.f_star;
    const PLFunction& gs = *verdict.g_star;
    const Rational& c = verdict.ref_point;
    int N = verdict.big_n;
    if (u == c) return 0;

    // interval index: downward f*-orbit of c for u < c, upward preimages for u > c
    long long nu;
    Rational anchor;
    const int iter_cap = 1 << 20;
    if (u < c) {
        Rational hi = c;
        long long n = 0;
        while (true) {
            Rational next = fs.eval(hi);
            if (next <= u) break;
            hi = next;
            if (++n > iter_cap) throw resource_error("color_point: interval index iteration cap");
        }
        nu = n;
        anchor = hi;  // u in [f*(hi), hi)
    } else {
        // m = max { t : (f*)^t(u) >= c }
        Rational w = u;
        long long m = -1;
        while (w >= c) {
            w = fs.eval(w);
            if (++m > iter_cap) throw resource_error("color_point: interval index iteration cap");
        }
        nu = -(m + 1);
        // anchor = right end of u's interval: the (m+1)-st increasing preimage
        // of c, or the interval end when c climbs out of f*'s range
        anchor = c;
        bool open_end = false;
        for (long long t = 0; t <= m; ++t) {
            auto pre = fs.increasing_preimage(anchor);
            if (!pre || *pre >= verdict.hi) {
                open_end = true;
                break;
            }
            anchor = *pre;
        }
        if (open_end || anchor <= u) anchor = verdict.hi;
    }

    // sub-index via the g*-orbit of the anchor
    int sub = 0;
    Rational w = gs.eval(anchor);
    while (w > u) {
        w = gs.eval(w);
        ++sub;
        if (sub > N) break;
    }
    if (sub >= N)
        throw structural_error("color_point: sub-index exceeded N (probe-set estimate was not uniform here)");
    int parity = static_cast<int>(((nu % 2) + 2) % 2);
    return parity * N + sub;
}

}  // namespace amalgam
