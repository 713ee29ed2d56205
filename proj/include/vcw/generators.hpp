#pragma once
#include <cstdint>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

// Generalized theta graph: two hubs joined by internally disjoint paths
// with the given edge counts. Needs >= 3 lengths, each >= 1, at most one
// equal to 1. Bipartite iff all lengths share one parity.
Graph gen_theta(const std::vector<int>& lengths);

// Two copies of (C6 plus a pendant vertex), the pendants joined by a
// bridge: 14 vertices, 15 edges, bipartite with sides 7/7. Admits a proper
// {1,2}-weighting but no proper {0,1}-weighting.
Graph gen_gamma_pair();

Graph gen_complete_bipartite(int a, int b);

// Union of r seeded random perfect matchings between two n-sets; attempts
// that collide on an edge are discarded and regenerated from the advanced
// generator state, up to kRegularRetryBudget whole-graph attempts. Output
// is r-regular and simple but not necessarily connected.
Graph gen_regular_bipartite(int r, int n, std::uint64_t seed);

inline constexpr int kRegularRetryBudget = 1000;

} // namespace vcw
