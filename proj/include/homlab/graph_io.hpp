#pragma once

#include "homlab/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace homlab {

// {"name": str?, "vertices": int, "edges": [[u,v],...]}, 0-based.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// "p <n>" header line followed by one "u v" pair per line. Blank lines and
// lines starting with '#' or 'c' are skipped.
Graph graph_from_edge_list(std::istream& in, std::string name = {});
void write_edge_list(std::ostream& out, const Graph& g);

// Detects the format from the first non-blank character ('{' means JSON).
// Throws ParseError on malformed input.
Graph parse_graph(std::string_view text, std::string name = {});
Graph load_graph_file(const std::string& path);

// Builds a named generator from a spec such as "cycle:5", "complete:4",
// "path:3", "hypercube:3", "bipartite:2,3", "edgeless:4", "counterexample10".
Graph graph_from_generator(std::string_view spec);

} // namespace homlab
