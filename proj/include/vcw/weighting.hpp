#pragma once
#include <string>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

enum class WeightSet { zero_one, one_two };

int weight_set_low(WeightSet s);
int weight_set_high(WeightSet s);
std::string weight_set_name(WeightSet s); // "01" or "12"

// Edge weights over {0,1} or {1,2}, indexed by edge id of the graph they
// were built for. The induced color c(v) is the sum of weights on edges
// at v.
struct Weighting {
    WeightSet set = WeightSet::one_two;
    std::vector<int> w;

    int weight(int edge_id) const { return w[static_cast<std::size_t>(edge_id)]; }
};

std::vector<int> colors(const Graph& g, const Weighting& wt);

// Ids of the edges uv with c(u) == c(v); empty iff wt is vertex-coloring.
// Throws when a weight lies outside the weight set or wt does not cover g.
std::vector<int> verify_weighting(const Graph& g, const Weighting& wt);

// Text document: "# set 01|12" header, one line "u v w" per edge, then
// one line "c v color" per vertex.
std::string format_weighting(const Graph& g, const Weighting& wt);
// JSON variant: {"weight_set":[..], "edges":[[u,v,w],..], "colors":{"v":c}}.
std::string format_weighting_json(const Graph& g, const Weighting& wt);

// Parses the text document back. Color lines are optional on input but are
// cross-checked against the recomputed colors when present.
Weighting parse_weighting(const std::string& text, const Graph& g);

} // namespace vcw
