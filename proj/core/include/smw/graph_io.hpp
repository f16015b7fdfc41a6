#pragma once

#include <istream>
#include <string>

#include "smw/graph.hpp"

namespace smw {

/// Edge list: first line "n m", then m lines "u v" (0-indexed).
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(const std::string& text);

/// DIMACS: "c ..." comments, one "p edge n m" line, "e u v" lines (1-indexed).
Graph parse_dimacs(const std::string& text);

/// Picks DIMACS when the first significant line starts with 'p' or 'c'.
Graph parse_graph(const std::string& text);

Graph read_graph_file(const std::string& path);

std::string to_edge_list(const Graph& g);

}  // namespace smw
