#pragma once

// Interchange formats: DIMACS-like edge lists ("p edge n m" / "e u v",
// 1-based) and a JSON descriptor {"n":, "edges": [[u,v],...], "labels":}
// (0-based). Readers reject loops and duplicate edges.

#include <iosfwd>
#include <string>

#include "amalgam/graph.hpp"

namespace amalgam {

struct io_error : structural_error {
    using structural_error::structural_error;
};

Graph read_graph_dimacs(std::istream& in);
void write_graph_dimacs(std::ostream& out, const Graph& g);

Graph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g);

// Sniffs JSON by a leading '{'; everything else parses as DIMACS.
Graph read_graph_auto(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);  // by extension (.json vs rest)

}  // namespace amalgam
