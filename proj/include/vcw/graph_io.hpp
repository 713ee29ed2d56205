#pragma once
#include <string>

#include "vcw/graph.hpp"

namespace vcw {

// Edge-list document: optional header line "n <count>", then one edge per
// line "u v"; '#' lines and blank lines are ignored. Vertex count is
// 1 + max id unless the header overrides. Throws parse_error naming the
// offending line.
Graph parse_graph(const std::string& text);

// Writes the header plus one "u v" line per edge.
std::string format_graph(const Graph& g);

} // namespace vcw
