#pragma once
#include "vcw/graph.hpp"
#include "vcw/weighting.hpp"

namespace vcw {

enum class Side { u, w };

// Weighting for a connected bipartite graph whose designated side has even
// cardinality: a T-join F with T = that side is read off a spanning tree
// (reverse breadth-first sweep, parent edge included iff the vertex parity
// is still wrong), then F gets weight 1 and the rest 2 for {1,2} or 0 for
// {0,1}. Colors come out odd exactly on the designated side.
Weighting tjoin_weighting(const Graph& g, const Bipartition& bip, Side even_side,
                          WeightSet target_set);

} // namespace vcw
