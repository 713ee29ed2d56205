#include "vcw/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace vcw {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    edges_.reserve(edge_pairs.size());
    for (auto [a, b] : edge_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(a < 0 || a >= n ? a : b) +
                                        " outside [0, " + std::to_string(n) + ")");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        edges_.push_back(Edge{a, b});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].u) + " " +
                                        std::to_string(edges_[i].v));
    adj_.assign(static_cast<std::size_t>(n_), {});
    incident_.assign(static_cast<std::size_t>(n_), {});
    for (int id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        incident_[static_cast<std::size_t>(e.u)].push_back(id);
        incident_[static_cast<std::size_t>(e.v)].push_back(id);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Graph::incident_edges(int v) const {
    check_vertex(v);
    return incident_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& x, const Edge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    if (it == edges_.end() || !(*it == key)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Bipartition::size_u() const {
    int c = 0;
    for (auto s : side) c += (s == 0);
    return c;
}

int Bipartition::size_w() const { return static_cast<int>(side.size()) - size_u(); }

std::vector<int> Bipartition::side_u() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[static_cast<std::size_t>(v)] == 0) out.push_back(v);
    return out;
}

std::vector<int> Bipartition::side_w() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[static_cast<std::size_t>(v)] == 1) out.push_back(v);
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(v)]);
                    q.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    Bipartition bip;
    bip.side.assign(color.begin(), color.end());
    return bip;
}

std::vector<int> neighbors_with_degree(const Graph& g, int v, int r) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (g.degree(w) == r) out.push_back(w);
    return out;
}

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(v)]);
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    // Tree paths from both endpoints to the root; the
                    // conflict edge closes an odd cycle through their
                    // lowest common ancestor.
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) pw.push_back(x);
                    while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    std::vector<int> cycle(pv.rbegin(), pv.rend()); // meet .. v
                    for (std::size_t i = 0; i + 1 < pw.size(); ++i) cycle.push_back(pw[i]);
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace vcw
