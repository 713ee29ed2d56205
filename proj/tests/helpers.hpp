#pragma once
#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "vcw/graph.hpp"
#include "vcw/parity.hpp"
#include "vcw/rng.hpp"

namespace testutil {

inline vcw::Graph make_path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return vcw::Graph(k, std::move(edges));
}

inline vcw::Graph make_cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return vcw::Graph(k, std::move(edges));
}

inline vcw::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);     // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);           // spokes
    }
    return vcw::Graph(10, std::move(edges));
}

// Independent maximum-matching size: bitmask recursion over the lowest
// free vertex. n <= ~20.
inline int brute_max_matching_size(const vcw::Graph& g, std::uint32_t used = 0,
                                   std::vector<int>* memo = nullptr) {
    std::vector<int> local;
    if (!memo) {
        local.assign(std::size_t{1} << g.vertex_count(), -1);
        memo = &local;
    }
    const std::uint32_t full = (std::uint32_t{1} << g.vertex_count()) - 1;
    if (used == full) return 0;
    int& slot = (*memo)[used];
    if (slot >= 0) return slot;
    int v = 0;
    while (used >> v & 1) ++v;
    int best = brute_max_matching_size(g, used | (1u << v), memo); // leave v exposed
    for (int w : g.neighbors(v))
        if (!(used >> w & 1))
            best = std::max(best, 1 + brute_max_matching_size(
                                          g, used | (1u << v) | (1u << w), memo));
    slot = best;
    return best;
}

inline vcw::Graph random_graph(vcw::Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return vcw::Graph(n, std::move(edges));
}

// Random bipartite graph on a random split, edges kept with probability p;
// not necessarily connected.
inline vcw::Graph random_bipartite(vcw::Rng& rng, int n, double p) {
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = rng.below(2);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] &&
                rng.chance(p))
                edges.emplace_back(u, v);
    return vcw::Graph(n, std::move(edges));
}

// Valid random prescription: f in [0, d(v)+1], g = f - 2k for small k, so
// lower bounds are sometimes negative and sometimes binding.
inline vcw::ParitySpec random_parity_spec(vcw::Rng& rng, const vcw::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> lower(static_cast<std::size_t>(n), 0);
    std::vector<int> upper(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int f = rng.below(g.degree(v) + 2);
        int k = rng.below(3);
        upper[static_cast<std::size_t>(v)] = f;
        lower[static_cast<std::size_t>(v)] = f - 2 * k;
    }
    return vcw::ParitySpec(std::move(lower), std::move(upper));
}

} // namespace testutil
