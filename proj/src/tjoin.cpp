#include "vcw/tjoin.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

#include "vcw/connectivity.hpp"
#include "vcw/error.hpp"

namespace vcw {

Weighting tjoin_weighting(const Graph& g, const Bipartition& bip, Side even_side,
                          WeightSet target_set) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("t-join weighting needs a non-trivial graph");
    if (static_cast<int>(bip.side.size()) != n)
        throw std::invalid_argument("bipartition does not match the graph");
    if (!is_connected(g)) throw std::invalid_argument("t-join weighting needs a connected graph");
    const int side_size = even_side == Side::u ? bip.size_u() : bip.size_w();
    if (side_size % 2 != 0)
        throw std::invalid_argument("designated side has odd cardinality " +
                                    std::to_string(side_size));

    auto wants_odd = [&](int v) {
        return (even_side == Side::u) == bip.in_u(v);
    };

    // Breadth-first spanning tree from vertex 0.
    std::vector<int> order;
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int id : g.incident_edges(v)) {
            const Edge& e = g.edge(id);
            int w = e.u == v ? e.v : e.u;
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            parent_edge[static_cast<std::size_t>(w)] = id;
            q.push(w);
        }
    }

    // Leaves first: each vertex decides its own parent edge, so its degree
    // parity is final when visited. The root comes out right because the
    // designated side has even size.
    std::vector<char> in_join(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> join_degree(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int pe = parent_edge[static_cast<std::size_t>(v)];
        if (pe < 0) continue;
        if ((join_degree[static_cast<std::size_t>(v)] & 1) != (wants_odd(v) ? 1 : 0)) {
            in_join[static_cast<std::size_t>(pe)] = 1;
            const Edge& e = g.edge(pe);
            ++join_degree[static_cast<std::size_t>(e.u)];
            ++join_degree[static_cast<std::size_t>(e.v)];
        }
    }

    Weighting wt;
    wt.set = target_set;
    wt.w.assign(static_cast<std::size_t>(g.edge_count()), 0);
    const int other = target_set == WeightSet::one_two ? 2 : 0;
    for (int id = 0; id < g.edge_count(); ++id)
        wt.w[static_cast<std::size_t>(id)] = in_join[static_cast<std::size_t>(id)] ? 1 : other;
    return wt;
}

} // namespace vcw
