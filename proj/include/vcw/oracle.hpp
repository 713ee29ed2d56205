#pragma once
#include <optional>

#include "vcw/graph.hpp"
#include "vcw/parity.hpp"
#include "vcw/weighting.hpp"

namespace vcw {

// Exhaustive scan over all |S|^|E| assignments in document order (edges
// ascending, smaller weight first); returns the lexicographically first
// proper weighting or a certified absence. Refuses |E| > budget.
std::optional<Weighting> brute_force_weighting(const Graph& g, WeightSet target_set,
                                               int budget = 22);

// Exhaustive scan over all edge subsets in ascending bitmask order over
// the canonical edge list; returns the first subset meeting every bound
// and parity. Refuses |E| > budget.
std::optional<Factor> brute_force_parity_factor(const Graph& g, const ParitySpec& spec,
                                                int budget = 16);

} // namespace vcw
