#include "amalgam/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace amalgam {

Graph read_graph_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0) throw io_error("bad DIMACS problem line: " + line);
            g = Graph(n);
        } else if (tag == 'e') {
            if (n < 0) throw io_error("DIMACS edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw io_error("bad DIMACS edge line: " + line);
            if (u < 1 || v < 1 || u > n || v > n) throw io_error("DIMACS edge endpoint out of range: " + line);
            if (u == v) throw io_error("DIMACS loop rejected: " + line);
            if (g.adjacent(u - 1, v - 1)) throw io_error("DIMACS duplicate edge rejected: " + line);
            g.add_edge(u - 1, v - 1);
            ++seen;
        } else {
            throw io_error("unrecognized DIMACS line: " + line);
        }
    }
    if (n < 0) throw io_error("DIMACS input has no problem line");
    if (m >= 0 && seen != m) throw io_error("DIMACS edge count mismatch");
    return g;
}

void write_graph_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.size() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw io_error(std::string("bad JSON graph: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw io_error("JSON graph missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0) throw io_error("JSON graph has negative n");
    Graph g(n);
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) throw io_error("JSON edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw io_error("JSON edge endpoint out of range");
        if (u == v) throw io_error("JSON loop rejected");
        if (g.adjacent(u, v)) throw io_error("JSON duplicate edge rejected");
        g.add_edge(u, v);
    }
    if (j.contains("labels")) {
        const auto& ls = j["labels"];
        if (!ls.is_array() || static_cast<int>(ls.size()) != n) throw io_error("JSON labels must list one entry per vertex");
        for (int v = 0; v < n; ++v)
            if (!ls[static_cast<std::size_t>(v)].is_null()) g.set_label(v, ls[static_cast<std::size_t>(v)].get<std::string>());
    }
    return g;
}

void write_graph_json(std::ostream& out, const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.size();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    out << j.dump(2) << "\n";
}

namespace {
bool looks_like_json(const std::string& path) {
    std::ifstream in(path);
    char c;
    while (in.get(c)) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}
}  // namespace

Graph read_graph_auto(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open graph file: " + path);
    if (looks_like_json(path)) return read_graph_json(in);
    return read_graph_dimacs(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write graph file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        write_graph_json(out, g);
    else
        write_graph_dimacs(out, g);
}

}  // namespace amalgam
