#include "vcw/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace vcw {

namespace {

// BFS over vertices != skip, starting at start. Returns number reached.
int bfs_count(const Graph& g, int start, int skip) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    seen[static_cast<std::size_t>(start)] = 1;
    q.push(start);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (w == skip || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            q.push(w);
        }
    }
    return reached;
}

// Dinic on the residual structure: arc 2i is edge i as (u -> v), arc 2i+1
// the reverse; both start with capacity 1.
struct UnitFlow {
    const Graph& g;
    std::vector<int> cap;
    std::vector<int> level;

    explicit UnitFlow(const Graph& g_) : g(g_) {}

    int arc_from(int edge_id, int tail) const {
        return 2 * edge_id + (g.edge(edge_id).u == tail ? 0 : 1);
    }

    bool build_levels(int s, int t) {
        level.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        std::queue<int> q;
        level[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incident_edges(v)) {
                const Edge& e = g.edge(id);
                int w = e.u == v ? e.v : e.u;
                if (cap[static_cast<std::size_t>(arc_from(id, v))] > 0 &&
                    level[static_cast<std::size_t>(w)] == -1) {
                    level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        return level[static_cast<std::size_t>(t)] != -1;
    }

    int augment(int v, int t, int pushed, std::vector<char>& dead) {
        if (v == t || pushed == 0) return pushed;
        if (dead[static_cast<std::size_t>(v)]) return 0;
        for (int id : g.incident_edges(v)) {
            const Edge& e = g.edge(id);
            int w = e.u == v ? e.v : e.u;
            if (level[static_cast<std::size_t>(w)] != level[static_cast<std::size_t>(v)] + 1) continue;
            int a = arc_from(id, v);
            if (cap[static_cast<std::size_t>(a)] == 0) continue;
            int got = augment(w, t, std::min(pushed, cap[static_cast<std::size_t>(a)]), dead);
            if (got > 0) {
                cap[static_cast<std::size_t>(a)] -= got;
                cap[static_cast<std::size_t>(a ^ 1)] += got;
                return got;
            }
        }
        dead[static_cast<std::size_t>(v)] = 1;
        return 0;
    }

    int max_flow(int s, int t) {
        cap.assign(static_cast<std::size_t>(2 * g.edge_count()), 1);
        int total = 0;
        while (build_levels(s, t)) {
            std::vector<char> dead(static_cast<std::size_t>(g.vertex_count()), 0);
            while (int f = augment(s, t, std::numeric_limits<int>::max(), dead)) total += f;
        }
        return total;
    }
};

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return bfs_count(g, 0, -1) == g.vertex_count();
}

bool connected_without(const Graph& g, int v) {
    g.check_vertex(v);
    const int n = g.vertex_count();
    if (n <= 1) return true; // zero vertices remain
    int start = v == 0 ? 1 : 0;
    return bfs_count(g, start, v) == n - 1;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

int edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("edge connectivity needs at least 2 vertices");
    if (!is_connected(g)) return 0;
    UnitFlow flow(g);
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.vertex_count(); ++t) best = std::min(best, flow.max_flow(0, t));
    return best;
}

} // namespace vcw
