#pragma once

#include <iosfwd>
#include <string>

#include "indpath/graph.hpp"

namespace indpath {

// Text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list_text(std::istream& in);
void write_edge_list_text(std::ostream& out, const Graph& g);

// JSON mirror: {"n": <count>, "edges": [[u,v], ...]}.
Graph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g);

/// Reads a graph file, dispatching on extension (".json" vs. edge-list text).
Graph load_graph(const std::string& path);

}  // namespace indpath
