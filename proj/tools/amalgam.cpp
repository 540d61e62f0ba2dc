// Batch experiment front end. Subcommands: chromatic, mycielski,
// kalpha (check|epsilon), generic (grow|audit), witness (half|shatter),
// shift, cell (analyze), homog, verify.
//
// Exit codes: 0 success, 1 contract violation (message names the violated
// precondition), 2 unreadable input or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "amalgam/amalgamation.hpp"
#include "amalgam/coloring.hpp"
#include "amalgam/graph_io.hpp"
#include "amalgam/interval_cell.hpp"
#include "amalgam/mycielski.hpp"
#include "amalgam/predimension.hpp"
#include "amalgam/witnesses.hpp"

namespace {

using namespace amalgam;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write file: " + path);
    out << text;
}

ordered_json coloring_json(const Coloring& c) {
    ordered_json j = ordered_json::array();
    for (int col : c.colors) j.push_back(col);
    return j;
}

ClassDescriptor descriptor_from_flags(const std::string& cls, const std::string& alpha_str, bool strict) {
    if (cls == "allgraphs") return ClassDescriptor::all_graphs();
    if (cls == "trianglefree") return ClassDescriptor::clique_free(3);
    if (cls.size() > 5 && cls.front() == 'k' && cls.substr(cls.size() - 4) == "free")
        return ClassDescriptor::clique_free(std::stoi(cls.substr(1, cls.size() - 5)));
    if (cls == "kalpha") {
        if (alpha_str.empty()) throw contract_error("class kalpha requires --alpha p/q");
        return ClassDescriptor::k_alpha(Alpha::parse(alpha_str), strict ? Closedness::Strict : Closedness::Weak);
    }
    throw contract_error("unknown class '" + cls + "' (expected allgraphs, trianglefree, k<m>free, kalpha)");
}

std::string growth_log_csv(const GrowthLog& log) {
    std::ostringstream csv;
    csv << "step,size,edges,chi,omega\n";
    for (std::size_t i = 0; i < log.steps.size(); ++i) {
        const GrowthStep& st = log.steps[i];
        csv << i << "," << st.size << "," << st.edges << ",";
        if (st.chi) csv << *st.chi;
        csv << ",";
        if (st.omega) csv << *st.omega;
        csv << "\n";
    }
    return csv.str();
}

int cmd_chromatic(const std::string& graphfile, const std::string& out_prefix) {
    Graph g = read_graph_auto(graphfile);
    ChromaticResult chi = chromatic_number(g);
    CliqueWitness cw = max_clique(g);
    ordered_json j;
    j["chi"] = chi.number;
    j["omega"] = cw.members.count();
    j["coloring"] = coloring_json(chi.witness);
    std::cout << j.dump(2) << "\n";
    if (!out_prefix.empty()) {
        ordered_json cert;
        cert["kind"] = "coloring";
        cert["colors"] = coloring_json(chi.witness);
        write_file(out_prefix + ".coloring.json", cert.dump(2) + "\n");
        ordered_json cl;
        cl["kind"] = "clique";
        cl["members"] = cw.members.to_vector();
        write_file(out_prefix + ".clique.json", cl.dump(2) + "\n");
    }
    return 0;
}

int cmd_mycielski(const std::string& graphfile, int iterate, const std::string& out_prefix) {
    Graph g = read_graph_auto(graphfile);
    std::ostringstream csv;
    csv << "iterate,size,edges,chi,omega,max_degree\n";
    auto row = [&](int idx, const Graph& h) {
        ChromaticResult chi = chromatic_number(h);
        csv << idx << "," << h.size() << "," << h.edge_count() << "," << chi.number << "," << clique_number(h) << ","
            << h.max_degree() << "\n";
    };
    row(0, g);
    Graph cur = g;
    for (int i = 1; i <= iterate; ++i) {
        cur = mycielskian(cur).graph;
        row(i, cur);
    }
    std::cout << csv.str();
    if (!out_prefix.empty()) {
        write_graph_file(out_prefix + ".graph", cur);
        write_file(out_prefix + ".csv", csv.str());
    }
    return 0;
}

int cmd_kalpha_check(const std::string& graphfile, const std::string& alpha_str, bool strict) {
    Graph g = read_graph_auto(graphfile);
    Alpha alpha = Alpha::parse(alpha_str);
    MembershipResult m = in_k_alpha(g, alpha);
    ordered_json j;
    j["alpha"] = format_rational(alpha.value);
    j["member"] = m.member;
    j["min_delta"] = format_rational(m.min_delta);
    if (!m.member) j["violating_subset"] = m.violating.to_vector();
    // closedness of the empty set in g under the requested notion
    ClosednessResult ec = is_closed(VertexSet(g.size()), g, alpha, strict ? Closedness::Strict : Closedness::Weak);
    j["empty_set_closed"] = ec.closed;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_kalpha_epsilon(int n, const std::string& out_prefix) {
    EpsilonResult r = lower_bound_epsilon(n);
    ordered_json j;
    j["n"] = n;
    j["epsilon"] = format_rational(r.epsilon);
    j["witness_size"] = r.witness.size();
    j["witness_edges"] = r.witness.edge_count();
    std::cout << j.dump(2) << "\n";
    if (!out_prefix.empty()) write_graph_file(out_prefix + ".graph", r.witness);
    return 0;
}

int cmd_generic_grow(const std::string& cls, const std::string& alpha_str, bool strict, int budget, int size_cap,
                     std::uint64_t seed, const std::string& embed_file, const std::string& out_prefix, bool with_chi) {
    ClassDescriptor d = descriptor_from_flags(cls, alpha_str, strict);
    GrowOptions opts;
    opts.log_chi = with_chi;
    GrowResult res;
    if (!embed_file.empty()) {
        Graph target = read_graph_auto(embed_file);
        // plant the target first, then saturate around it
        GrowthLog embed_log;
        embed_log.seed = seed;
        EmbedResult em = embed_target(Graph(0), d, target, &embed_log);
        res = grow_generic(d, budget, size_cap, seed, opts, &em.graph, &embed_log);
    } else {
        res = grow_generic(d, budget, size_cap, seed, opts);
    }
    ChromaticResult chi = chromatic_number(res.graph);
    int omega = clique_number(res.graph);
    if (!res.log.steps.empty()) {
        res.log.steps.back().chi = chi.number;
        res.log.steps.back().omega = omega;
    }
    ordered_json j;
    j["class"] = d.name;
    j["seed"] = seed;
    j["size"] = res.graph.size();
    j["edges"] = res.graph.edge_count();
    j["chi"] = chi.number;
    j["omega"] = omega;
    j["saturated"] = res.saturated;
    j["note"] = res.log.note;
    std::cout << j.dump(2) << "\n";
    if (!out_prefix.empty()) {
        write_graph_file(out_prefix + ".graph", res.graph);
        write_file(out_prefix + ".csv", growth_log_csv(res.log));
    }
    return 0;
}

int cmd_generic_audit(const std::string& graphfile, const std::string& cls, const std::string& alpha_str, bool strict,
                      int a_max, int b_max) {
    Graph g = read_graph_auto(graphfile);
    ClassDescriptor d = descriptor_from_flags(cls, alpha_str, strict);
    auto missing = audit_extension_axioms(g, d, a_max, b_max);
    ordered_json j;
    j["class"] = d.name;
    j["a_max"] = a_max;
    j["b_max"] = b_max;
    j["missing_count"] = missing.size();
    ordered_json arr = ordered_json::array();
    for (const auto& mx : missing) {
        ordered_json m;
        m["base"] = mx.base;
        m["pattern"] = mx.pattern.describe();
        arr.push_back(std::move(m));
    }
    j["missing"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_witness_half(const std::string& graphfile, int cap, const std::string& out_prefix) {
    Graph g = read_graph_auto(graphfile);
    HalfGraphResult r = max_half_graph(g, cap);
    ordered_json j;
    j["order"] = r.order;
    j["a_seq"] = r.witness.a_seq;
    j["b_seq"] = r.witness.b_seq;
    std::cout << j.dump(2) << "\n";
    if (!out_prefix.empty()) {
        ordered_json cert;
        cert["kind"] = "half_graph";
        cert["a_seq"] = r.witness.a_seq;
        cert["b_seq"] = r.witness.b_seq;
        write_file(out_prefix + ".halfgraph.json", cert.dump(2) + "\n");
    }
    return 0;
}

int cmd_witness_shatter(const std::string& graphfile, int cap, const std::string& out_prefix) {
    Graph g = read_graph_auto(graphfile);
    ShatterResult r = max_shattered_set(g, cap);
    ordered_json j;
    j["size"] = r.size;
    j["base"] = r.witness.base;
    ordered_json realizers = ordered_json::array();
    for (const auto& [subset, v] : r.witness.realizers) {
        ordered_json e;
        e["subset"] = subset;
        e["vertex"] = v;
        realizers.push_back(std::move(e));
    }
    j["realizers"] = realizers;
    std::cout << j.dump(2) << "\n";
    if (!out_prefix.empty()) {
        ordered_json cert;
        cert["kind"] = "shatter";
        cert["base"] = r.witness.base;
        cert["realizers"] = realizers;
        write_file(out_prefix + ".shatter.json", cert.dump(2) + "\n");
    }
    return 0;
}

int cmd_shift(int n, int k, const std::string& out_file) {
    Graph g = shift_graph(n, k);
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["vertices"] = g.size();
    j["edges"] = g.edge_count();
    j["triangle_free"] = triangle_free(g);
    std::cout << j.dump(2) << "\n";
    if (!out_file.empty()) write_graph_file(out_file, g);
    return 0;
}

int cmd_cell_analyze(const std::string& specfile, int clique_k, int color_sample, std::uint64_t sample_seed,
                     const std::string& out_prefix) {
    CellSpec spec = parse_cellspec_json(read_file(specfile));
    CellVerdict v = analyze_cell(spec);
    ordered_json j;
    switch (v.branch) {
        case CellBranch::CliqueIdentitySegment:
            j["branch"] = "clique_identity_segment";
            break;
        case CellBranch::CliqueOrbit:
            j["branch"] = "clique_orbit";
            break;
        case CellBranch::BipartiteShortcut:
            j["branch"] = "bipartite";
            break;
        case CellBranch::BoundedColoring:
            j["branch"] = "bounded_coloring";
            break;
    }
    j["detail"] = v.describe();
    j["interval"] = {format_rational(v.lo), format_rational(v.hi)};
    if (v.branch == CellBranch::BoundedColoring) {
        j["n"] = v.big_n;
        j["colors_bound"] = 2 * v.big_n;
        j["reference_point"] = format_rational(v.ref_point);
    }
    ordered_json fps = ordered_json::array();
    for (const auto& x : v.fixed_points) fps.push_back(format_rational(x));
    j["fixed_points"] = std::move(fps);

    if (clique_k > 0) {
        auto pts = emit_clique(v, clique_k);
        ordered_json cert;
        cert["kind"] = "cell_clique";
        ordered_json arr = ordered_json::array();
        for (const auto& p : pts) arr.push_back(format_rational(p));
        cert["points"] = std::move(arr);
        j["clique_size"] = clique_k;
        if (!out_prefix.empty()) write_file(out_prefix + ".cellclique.json", cert.dump(2) + "\n");
    }
    if (color_sample > 0) {
        if (v.branch != CellBranch::BoundedColoring && v.branch != CellBranch::BipartiteShortcut)
            throw contract_error("--color-sample requires a coloring or bipartite verdict");
        // deterministic rational grid in the analyzed interval
        std::vector<Rational> pts;
        for (int i = 1; i <= color_sample; ++i)
            pts.push_back(v.lo + (v.hi - v.lo) * Rational(2 * i - 1, 2 * color_sample) +
                          Rational(static_cast<long long>(sample_seed % 997), 1000000) * (v.hi - v.lo) / color_sample);
        std::vector<Rational> unique_pts;
        for (const auto& p : pts)
            if (p > v.lo && p < v.hi && std::find(unique_pts.begin(), unique_pts.end(), p) == unique_pts.end())
                unique_pts.push_back(p);
        CellSpec analyzed = v.original;
        analyzed.d0 = v.lo;
        analyzed.e0 = v.hi;
        Graph sample = materialize_sample(analyzed, unique_pts);
        std::vector<int> colors;
        if (v.branch == CellBranch::BoundedColoring) {
            for (const auto& p : unique_pts) colors.push_back(color_point(v, p));
        } else {
            ChromaticResult chi = chromatic_number(sample);
            if (chi.number > 2) throw structural_error("bipartite-shortcut sample was not 2-colorable");
            colors = chi.witness.colors;
        }
        Coloring col;
        col.colors = colors;
        if (!verify_coloring(sample, col)) throw structural_error("cell coloring failed properness verification");
        j["sample_size"] = static_cast<int>(unique_pts.size());
        j["sample_colors_used"] = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
        if (!out_prefix.empty()) {
            ordered_json cert;
            cert["kind"] = "cell_coloring";
            ordered_json arr = ordered_json::array();
            for (const auto& p : unique_pts) arr.push_back(format_rational(p));
            cert["points"] = std::move(arr);
            cert["colors"] = colors;
            write_file(out_prefix + ".cellcoloring.json", cert.dump(2) + "\n");
        }
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_homog(const std::string& graphfile, int k) {
    Graph g = read_graph_auto(graphfile);
    HomogeneityResult r = check_homogeneity(g, k);
    ordered_json j;
    j["k"] = k;
    j["homogeneous"] = r.homogeneous;
    if (!r.homogeneous) {
        ordered_json ce;
        ce["source"] = r.source;
        ce["target"] = r.target;
        ce["map"] = r.map;
        j["counterexample"] = std::move(ce);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& graphfile, const std::string& cellspec_file, const std::string& certfile) {
    nlohmann::json cert = nlohmann::json::parse(read_file(certfile));
    std::string kind = cert.at("kind").get<std::string>();
    bool valid = false;
    if (kind == "coloring" || kind == "clique" || kind == "half_graph" || kind == "shatter") {
        if (graphfile.empty()) throw contract_error("verify: this certificate kind requires --graph");
        Graph g = read_graph_auto(graphfile);
        if (kind == "coloring") {
            Coloring c;
            for (const auto& x : cert.at("colors")) c.colors.push_back(x.get<int>());
            valid = verify_coloring(g, c);
        } else if (kind == "clique") {
            std::vector<int> mem;
            for (const auto& x : cert.at("members")) mem.push_back(x.get<int>());
            valid = true;
            for (std::size_t i = 0; i < mem.size() && valid; ++i)
                for (std::size_t j = i + 1; j < mem.size() && valid; ++j)
                    if (!g.adjacent(mem[i], mem[j])) valid = false;
        } else if (kind == "half_graph") {
            HalfGraphWitness w;
            for (const auto& x : cert.at("a_seq")) w.a_seq.push_back(x.get<int>());
            for (const auto& x : cert.at("b_seq")) w.b_seq.push_back(x.get<int>());
            valid = verify_half_graph(g, w);
        } else {
            ShatterWitness w;
            for (const auto& x : cert.at("base")) w.base.push_back(x.get<int>());
            for (const auto& e : cert.at("realizers")) {
                std::vector<int> subset;
                for (const auto& x : e.at("subset")) subset.push_back(x.get<int>());
                w.realizers[subset] = e.at("vertex").get<int>();
            }
            valid = verify_shatter(g, w);
        }
    } else if (kind == "cell_clique" || kind == "cell_coloring") {
        if (cellspec_file.empty()) throw contract_error("verify: cell certificates require --cellspec");
        CellSpec spec = parse_cellspec_json(read_file(cellspec_file));
        std::vector<Rational> pts;
        for (const auto& x : cert.at("points")) pts.push_back(parse_rational(x.get<std::string>()));
        if (kind == "cell_clique") {
            valid = true;
            for (std::size_t i = 0; i < pts.size() && valid; ++i)
                for (std::size_t j = i + 1; j < pts.size() && valid; ++j)
                    if (!spec.cell_edge(std::max(pts[i], pts[j]), std::min(pts[i], pts[j]))) valid = false;
        } else {
            std::vector<int> colors;
            for (const auto& x : cert.at("colors")) colors.push_back(x.get<int>());
            valid = colors.size() == pts.size();
            for (std::size_t i = 0; i < pts.size() && valid; ++i)
                for (std::size_t j = i + 1; j < pts.size() && valid; ++j)
                    if (spec.cell_edge(std::max(pts[i], pts[j]), std::min(pts[i], pts[j])) && colors[i] == colors[j])
                        valid = false;
        }
    } else {
        throw contract_error("verify: unknown certificate kind '" + kind + "'");
    }
    ordered_json j;
    j["kind"] = kind;
    j["valid"] = valid;
    std::cout << j.dump(2) << "\n";
    return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"model-theoretic graph constructions with certificate-checked solvers"};
    app.require_subcommand(1);

    // chromatic
    std::string chr_file, chr_out;
    auto* chromatic_cmd = app.add_subcommand("chromatic", "exact chromatic number and maximum clique");
    chromatic_cmd->add_option("graphfile", chr_file)->required();
    chromatic_cmd->add_option("--out", chr_out, "certificate file prefix");

    // mycielski
    std::string myc_file, myc_out;
    int myc_iter = 1;
    auto* myc_cmd = app.add_subcommand("mycielski", "iterated Mycielskians with per-iterate statistics");
    myc_cmd->add_option("graphfile", myc_file)->required();
    myc_cmd->add_option("--iterate", myc_iter, "number of iterations")->check(CLI::NonNegativeNumber);
    myc_cmd->add_option("--out", myc_out, "output prefix (.graph, .csv)");

    // kalpha
    auto* kalpha_cmd = app.add_subcommand("kalpha", "predimension class checks");
    std::string ka_file, ka_alpha;
    bool ka_strict = false;
    auto* ka_check = kalpha_cmd->add_subcommand("check", "K_alpha membership with violating subset");
    ka_check->add_option("graphfile", ka_file)->required();
    ka_check->add_option("--alpha", ka_alpha, "alpha as p/q")->required();
    ka_check->add_flag("--strict", ka_strict, "use the strict closedness notion in the closedness report");
    int ka_n = 2;
    std::string ka_out;
    auto* ka_eps = kalpha_cmd->add_subcommand("epsilon", "lower-bound witness and epsilon for a target chi");
    ka_eps->add_option("--n", ka_n, "target chromatic number")->required();
    ka_eps->add_option("--out", ka_out, "witness graph file prefix");

    // generic
    auto* generic_cmd = app.add_subcommand("generic", "generic-structure growth and extension audits");
    std::string gg_class = "allgraphs", gg_alpha, gg_embed, gg_out;
    bool gg_strict = false, gg_with_chi = false;
    int gg_budget = 50, gg_size_cap = 4;
    std::uint64_t gg_seed = 1;
    auto* gg = generic_cmd->add_subcommand("grow", "grow a finite approximant by free amalgamation");
    gg->add_option("--class", gg_class, "allgraphs | trianglefree | k<m>free | kalpha");
    gg->add_option("--alpha", gg_alpha, "alpha as p/q (kalpha)");
    gg->add_flag("--strict", gg_strict, "strict closedness (kalpha)");
    gg->add_option("--budget", gg_budget)->check(CLI::PositiveNumber);
    gg->add_option("--size-cap", gg_size_cap)->check(CLI::PositiveNumber);
    gg->add_option("--seed", gg_seed);
    gg->add_option("--embed", gg_embed, "graph file to embed before saturation");
    gg->add_option("--out", gg_out, "output prefix (.graph, .csv)");
    gg->add_flag("--with-chi", gg_with_chi, "record chi/omega for every step (slow)");
    std::string ga_file, ga_class = "allgraphs", ga_alpha;
    bool ga_strict = false;
    int ga_amax = 2, ga_bmax = 3;
    auto* ga = generic_cmd->add_subcommand("audit", "list unrealized extension axioms");
    ga->add_option("graphfile", ga_file)->required();
    ga->add_option("--class", ga_class);
    ga->add_option("--alpha", ga_alpha);
    ga->add_flag("--strict", ga_strict);
    ga->add_option("--a-max", ga_amax);
    ga->add_option("--b-max", ga_bmax);

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "instability witnesses");
    std::string wh_file, wh_out;
    int wh_cap = 4;
    auto* wh = witness_cmd->add_subcommand("half", "maximum half-graph order");
    wh->add_option("graphfile", wh_file)->required();
    wh->add_option("--cap", wh_cap)->check(CLI::PositiveNumber);
    wh->add_option("--out", wh_out, "certificate prefix");
    std::string ws_file, ws_out;
    int ws_cap = 3;
    auto* ws = witness_cmd->add_subcommand("shatter", "maximum shattered edge-free set");
    ws->add_option("graphfile", ws_file)->required();
    ws->add_option("--cap", ws_cap)->check(CLI::PositiveNumber);
    ws->add_option("--out", ws_out, "certificate prefix");

    // shift
    int sh_n = 4, sh_k = 2;
    std::string sh_out;
    auto* sh = app.add_subcommand("shift", "shift graph generator");
    sh->add_option("--n", sh_n)->required();
    sh->add_option("--k", sh_k);
    sh->add_option("--out", sh_out, "graph file");

    // cell
    auto* cell_cmd = app.add_subcommand("cell", "interval-cell analysis");
    std::string ca_spec, ca_out;
    int ca_clique = 0, ca_sample = 0;
    std::uint64_t ca_seed = 0;
    auto* ca = cell_cmd->add_subcommand("analyze", "clique-or-coloring decision for a PL cell");
    ca->add_option("specfile", ca_spec)->required();
    ca->add_option("--clique", ca_clique, "emit a verified clique of this size");
    ca->add_option("--color-sample", ca_sample, "color a sample of this many points");
    ca->add_option("--sample-seed", ca_seed);
    ca->add_option("--out", ca_out, "certificate prefix");

    // homog
    std::string ho_file;
    int ho_k = 3;
    auto* ho = app.add_subcommand("homog", "finite homogeneity truncation check");
    ho->add_option("graphfile", ho_file)->required();
    ho->add_option("--k", ho_k)->check(CLI::PositiveNumber);

    // verify
    std::string ve_graph, ve_cellspec, ve_cert;
    auto* ve = app.add_subcommand("verify", "re-verify an emitted certificate definitionally");
    ve->add_option("--graph", ve_graph);
    ve->add_option("--cellspec", ve_cellspec);
    ve->add_option("--cert", ve_cert)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (chromatic_cmd->parsed()) return cmd_chromatic(chr_file, chr_out);
        if (myc_cmd->parsed()) return cmd_mycielski(myc_file, myc_iter, myc_out);
        if (kalpha_cmd->parsed()) {
            if (ka_check->parsed()) return cmd_kalpha_check(ka_file, ka_alpha, ka_strict);
            if (ka_eps->parsed()) return cmd_kalpha_epsilon(ka_n, ka_out);
            std::cerr << "kalpha requires a subcommand (check|epsilon)\n";
            return 1;
        }
        if (generic_cmd->parsed()) {
            if (gg->parsed())
                return cmd_generic_grow(gg_class, gg_alpha, gg_strict, gg_budget, gg_size_cap, gg_seed, gg_embed,
                                        gg_out, gg_with_chi);
            if (ga->parsed()) return cmd_generic_audit(ga_file, ga_class, ga_alpha, ga_strict, ga_amax, ga_bmax);
            std::cerr << "generic requires a subcommand (grow|audit)\n";
            return 1;
        }
        if (witness_cmd->parsed()) {
            if (wh->parsed()) return cmd_witness_half(wh_file, wh_cap, wh_out);
            if (ws->parsed()) return cmd_witness_shatter(ws_file, ws_cap, ws_out);
            std::cerr << "witness requires a subcommand (half|shatter)\n";
            return 1;
        }
        if (sh->parsed()) return cmd_shift(sh_n, sh_k, sh_out);
        if (cell_cmd->parsed()) {
            if (ca->parsed()) return cmd_cell_analyze(ca_spec, ca_clique, ca_sample, ca_seed, ca_out);
            std::cerr << "cell requires a subcommand (analyze)\n";
            return 1;
        }
        if (ho->parsed()) return cmd_homog(ho_file, ho_k);
        if (ve->parsed()) return cmd_verify(ve_graph, ve_cellspec, ve_cert);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 1;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
