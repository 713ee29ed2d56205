#include "vcw/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcw {

std::optional<Weighting> brute_force_weighting(const Graph& g, WeightSet target_set, int budget) {
    const int m = g.edge_count();
    if (m > budget)
        throw std::invalid_argument("weighting enumeration budget exceeded: " + std::to_string(m) +
                                    " edges > " + std::to_string(budget));
    const int n = g.vertex_count();
    const int low = weight_set_low(target_set);
    const int high = weight_set_high(target_set);

    std::vector<int> partial(static_cast<std::size_t>(n), 0);
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> w(static_cast<std::size_t>(m), 0);

    // Only prune on finished vertices, which keeps the scan exhaustive and
    // leaves the lexicographic order of witnesses intact.
    auto ok_endpoint = [&](int x) {
        if (remaining[static_cast<std::size_t>(x)] != 0) return true;
        for (int y : g.neighbors(x))
            if (remaining[static_cast<std::size_t>(y)] == 0 &&
                partial[static_cast<std::size_t>(y)] == partial[static_cast<std::size_t>(x)])
                return false;
        return true;
    };

    auto dfs = [&](auto&& self, int id) -> bool {
        if (id == m) return true;
        const Edge& e = g.edge(id);
        for (int value : {low, high}) {
            w[static_cast<std::size_t>(id)] = value;
            partial[static_cast<std::size_t>(e.u)] += value;
            partial[static_cast<std::size_t>(e.v)] += value;
            --remaining[static_cast<std::size_t>(e.u)];
            --remaining[static_cast<std::size_t>(e.v)];
            bool fine = ok_endpoint(e.u) && ok_endpoint(e.v);
            if (fine && self(self, id + 1)) return true;
            partial[static_cast<std::size_t>(e.u)] -= value;
            partial[static_cast<std::size_t>(e.v)] -= value;
            ++remaining[static_cast<std::size_t>(e.u)];
            ++remaining[static_cast<std::size_t>(e.v)];
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    Weighting wt;
    wt.set = target_set;
    wt.w = std::move(w);
    return wt;
}

std::optional<Factor> brute_force_parity_factor(const Graph& g, const ParitySpec& spec, int budget) {
    if (spec.size() != g.vertex_count())
        throw std::invalid_argument("parity spec does not match the graph");
    const int m = g.edge_count();
    if (m > budget)
        throw std::invalid_argument("factor enumeration budget exceeded: " + std::to_string(m) +
                                    " edges > " + std::to_string(budget));
    const int n = g.vertex_count();

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    const std::uint64_t total = std::uint64_t{1} << m;
    // Counting order; successive masks differ in the trailing bits, so the
    // degree sequence is maintained incrementally.
    for (std::uint64_t mask = 0;; ++mask) {
        bool good = true;
        for (int v = 0; v < n && good; ++v)
            good = spec.admits(v, degree[static_cast<std::size_t>(v)]);
        if (good) {
            std::vector<int> ids;
            for (int id = 0; id < m; ++id)
                if (mask >> id & 1) ids.push_back(id);
            return Factor(g, std::move(ids));
        }
        if (mask + 1 == total) break;
        std::uint64_t flipped = mask ^ (mask + 1);
        for (int id = 0; id < m && (flipped >> id) != 0; ++id) {
            if (!(flipped >> id & 1)) continue;
            int delta = (mask >> id & 1) ? -1 : 1; // bit turns off or on
            degree[static_cast<std::size_t>(g.edge(id).u)] += delta;
            degree[static_cast<std::size_t>(g.edge(id).v)] += delta;
        }
    }
    return std::nullopt;
}

} // namespace vcw
