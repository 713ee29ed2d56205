#pragma once
#include <optional>
#include <vector>

#include "vcw/graph.hpp"
#include "vcw/parity.hpp"

namespace vcw {

// Result of the gadget reduction from a (g,f)-parity factor instance to
// perfect matching. h has a perfect matching iff the instance is feasible;
// back_map sends the h-edges that stand for original edges to their edge
// id and every other h-edge to -1.
struct MatchingReduction {
    Graph h;
    std::vector<int> back_map;
    // Set when g(v) > d(v) somewhere: the instance is infeasible outright
    // and h is left empty rather than building a malformed gadget.
    bool infeasible = false;
    std::vector<int> infeasible_vertices;
};

// Two-layer construction. Layer 1 gives each vertex (f(v)-g(v))/2 slack
// gadgets {x,y} with edges vx, vy, xy; a gadget absorbs 0 or 2 units of
// v's factor degree, which realizes every degree of the right parity in
// [g(v), f(v)]. Layer 2 is the degree gadget: a vertex of augmented degree
// d and target t becomes d external nodes (one per incident edge) and
// d - t internal nodes joined to all of its externals; each augmented-graph
// edge becomes one external-external edge.
MatchingReduction reduce_to_matching(const Graph& g, const ParitySpec& spec);

// Feasibility and construction of a (g,f)-parity factor via the reduction.
// Returned factors always satisfy the spec; nullopt means none exists.
std::optional<Factor> solve_parity_factor(const Graph& g, const ParitySpec& spec);

} // namespace vcw
