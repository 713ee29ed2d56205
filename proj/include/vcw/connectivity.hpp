#pragma once
#include "vcw/graph.hpp"

namespace vcw {

// Graphs on zero vertices count as connected.
bool is_connected(const Graph& g);

// Connectivity of g with v and its incident edges deleted.
bool connected_without(const Graph& g, int v);

// n >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

// Edge connectivity lambda(g): min over t != s of max-flow(s, t) with unit
// capacities on both directions of every edge, s fixed. Requires n >= 2;
// returns 0 for disconnected graphs.
int edge_connectivity(const Graph& g);

} // namespace vcw
