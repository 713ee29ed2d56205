#pragma once
#include <cstdint>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

// Isomorphism-invariant encoding: the minimum, over all vertex orders, of
// the adjacency bit-string read column by column (position k contributes
// its adjacencies to positions 0..k-1). Branch-and-bound with twin
// skipping; supports n <= 11.
std::uint64_t canonical_form(const Graph& g);

// All connected bipartite graphs with 2..n_max vertices and at least one
// edge, one representative per isomorphism class, grown a vertex at a time
// and deduplicated by canonical form. Deterministic order: by vertex
// count, then edge count, then canonical form. n_max <= 10.
std::vector<Graph> enumerate_small_bipartite(int n_max);

} // namespace vcw
