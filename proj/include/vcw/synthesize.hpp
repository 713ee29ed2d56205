#pragma once
#include <optional>

#include "vcw/graph.hpp"
#include "vcw/parity.hpp"
#include "vcw/tjoin.hpp"
#include "vcw/weighting.hpp"

namespace vcw {

// Parity specs whose factors turn into proper weightings around an anchor
// vertex u of minimum degree. The side containing u plays the role of U;
// both sides must have odd cardinality and d(u) must equal the minimum
// degree.
//
// For the {1,2} route the factor has d_F(u) = delta, degrees of parity
// delta+1 on U-u and delta on W, and degree <= delta-2 on the minimum-
// degree neighbors of u. For the {0,1} route it has d_F(u) = 0, odd
// degrees on U-u, and even degrees >= 2 on the neighbors of u.
ParitySpec spec_for_weight12(const Graph& g, const Bipartition& bip, int u);
ParitySpec spec_for_weight01(const Graph& g, const Bipartition& bip, int u);

// Least-id anchor vertex for the odd-odd routes. Requires a connected,
// 3-edge-connected bipartite graph (hypothesis_error otherwise). With
// minimum degree >= 4, picks a minimum-degree vertex whose removal keeps
// the graph connected; with minimum degree 3 the {1,2} mode also demands
// at most 2 degree-3 neighbors and the {0,1} mode some neighbor of degree
// above 3. Absent when nothing qualifies (e.g. 3-regular graphs in {0,1}
// mode).
std::optional<int> select_vertex(const Graph& g, const Bipartition& bip, WeightSet mode);

// Exhaustive backtracking over {1,2} edge weights; nullopt is a completed
// search proving no proper weighting exists.
std::optional<Weighting> search_weighting12(const Graph& g);

// w - 1 on every edge; proper weightings of regular graphs stay proper
// because every color drops by exactly the degree.
Weighting shift_one_two_to_zero_one(const Graph& g, const Weighting& wt);

struct SynthesisOptions {
    // On unmet hypotheses, fall back to the exhaustive oracle instead of
    // throwing, and report honest infeasibility (nullopt) when that search
    // completes without a witness.
    bool fallback_search = false;
    int fallback_budget = 22;
};

// Proper weighting construction for connected bipartite graphs:
// (a) a side of even cardinality -> t-join route;
// (b) both sides odd, r-regular with r >= 3 -> backtracking search for
//     {1,2}, shifted down for {0,1};
// (c) both sides odd, irregular -> anchor vertex + parity factor, factor
//     edges get weight 1 and the rest 2 (set {1,2}) or 0 (set {0,1}).
// Throws std::invalid_argument for non-bipartite or disconnected input and
// hypothesis_error for unmet route hypotheses (unless fallback is enabled).
std::optional<Weighting> synthesize_weighting(const Graph& g, WeightSet target_set,
                                              const SynthesisOptions& options = {});

} // namespace vcw
