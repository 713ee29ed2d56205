#pragma once
#include "vcw/graph.hpp"
#include "vcw/parity.hpp"

namespace vcw {

// Maximum cardinality matching on a general graph, blossom-shrinking
// augmenting-path search with a greedy warm start. Deterministic given the
// canonical vertex order.
Factor max_matching(const Graph& g);

// mate[v] of a maximum matching, -1 for exposed vertices.
std::vector<int> max_matching_mates(const Graph& g);

} // namespace vcw
