#pragma once

// Text formats: whitespace edge lists ("n q" header then q lines "i j"),
// compact inline lists ("1-2,2-3"), and DOT for rendering elsewhere.

#include <iosfwd>
#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

// reads one "n q" record; throws std::invalid_argument on malformed input
Graph read_graph(std::istream& is);

// reads records until the stream runs out
std::vector<Graph> read_graphs(std::istream& is);

Graph read_graph_file(const std::string& path);

// "1-2,2-3" or "1-2 2-3"; n defaults to the largest label mentioned
Graph parse_inline_edges(const std::string& text, int n = 0);

void write_graph(std::ostream& os, const Graph& g);

std::string edge_list_string(const std::vector<Edge>& edges);

std::string to_dot(int n, const std::vector<Edge>& edges, const std::string& name = "g");

}  // namespace grace
