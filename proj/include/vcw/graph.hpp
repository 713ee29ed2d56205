#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace vcw {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after
// construction; edge ids are indices into edges(), sorted by (u,v),
// and adjacency lists are sorted, so every traversal is reproducible.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, parallel edges or
    // ids outside [0, n).
    Graph(int n, std::vector<std::pair<int, int>> edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    const std::vector<int>& neighbors(int v) const;
    // Ids of edges incident to v, ascending.
    const std::vector<int>& incident_edges(int v) const;

    int degree(int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Edge id for {u,v}, or -1 when absent.
    int edge_index(int u, int v) const;

    int min_degree() const;
    int max_degree() const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> incident_;
};

// The (U,W) split of a bipartite graph; side[v] is 0 for U, 1 for W.
struct Bipartition {
    std::vector<std::uint8_t> side;

    bool in_u(int v) const { return side[static_cast<std::size_t>(v)] == 0; }
    int size_u() const;
    int size_w() const;
    std::vector<int> side_u() const;
    std::vector<int> side_w() const;
};

// 2-coloring by breadth-first layering, per component, with the least
// vertex of each component (so in particular vertex 0) placed in U.
// Absent iff some odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

// Neighbors of v whose degree is exactly r.
std::vector<int> neighbors_with_degree(const Graph& g, int v, int r);

// Vertex sequence of some odd cycle, or nullopt when g is bipartite.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);

} // namespace vcw
