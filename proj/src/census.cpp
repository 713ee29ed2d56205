#include "vcw/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace vcw {

namespace {

struct CanonicalSearch {
    int n;
    std::vector<std::uint16_t> adj;
    std::vector<std::uint16_t> best; // column per position, valid once have_best
    bool have_best = false;
    std::vector<std::uint16_t> cur;
    std::vector<int> perm;
    std::uint16_t placed = 0;

    explicit CanonicalSearch(const Graph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(n), 0),
          best(static_cast<std::size_t>(n), 0),
          cur(static_cast<std::size_t>(n), 0),
          perm(static_cast<std::size_t>(n), -1) {
        for (const Edge& e : g.edges()) {
            adj[static_cast<std::size_t>(e.u)] |= static_cast<std::uint16_t>(1u << e.v);
            adj[static_cast<std::size_t>(e.v)] |= static_cast<std::uint16_t>(1u << e.u);
        }
    }

    bool twins(int a, int b) const {
        auto mask = [&](int x, int drop) {
            return adj[static_cast<std::size_t>(x)] & static_cast<std::uint16_t>(~(1u << drop));
        };
        return mask(a, b) == mask(b, a);
    }

    std::uint16_t column(int v, int pos) const {
        std::uint16_t col = 0;
        for (int j = 0; j < pos; ++j) {
            col = static_cast<std::uint16_t>(col << 1);
            if (adj[static_cast<std::size_t>(v)] >> perm[static_cast<std::size_t>(j)] & 1) col |= 1;
        }
        return col;
    }

    // -1 / 0 / +1 for cur[0..pos] versus best[0..pos].
    int compare_prefix(int pos) const {
        for (int k = 0; k <= pos; ++k) {
            if (cur[static_cast<std::size_t>(k)] != best[static_cast<std::size_t>(k)])
                return cur[static_cast<std::size_t>(k)] < best[static_cast<std::size_t>(k)] ? -1 : 1;
        }
        return 0;
    }

    void dfs(int pos) {
        if (pos == n) {
            best = cur;
            have_best = true;
            return;
        }
        std::vector<std::pair<std::uint16_t, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!(placed >> v & 1)) cands.emplace_back(column(v, pos), v);
        std::sort(cands.begin(), cands.end());
        std::vector<int> tried;
        for (auto [col, v] : cands) {
            bool redundant = false;
            for (int u : tried)
                if (twins(u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            cur[static_cast<std::size_t>(pos)] = col;
            if (have_best) {
                int cmp = compare_prefix(pos);
                if (cmp > 0) break; // columns sorted: later candidates only grow
                if (cmp == 0 && pos == n - 1) continue; // full string equal
            }
            perm[static_cast<std::size_t>(pos)] = v;
            placed = static_cast<std::uint16_t>(placed | (1u << v));
            dfs(pos + 1);
            placed = static_cast<std::uint16_t>(placed & ~(1u << v));
            perm[static_cast<std::size_t>(pos)] = -1;
        }
    }
};

} // namespace

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical form supports at most 11 vertices");
    if (n <= 1) return 0;
    CanonicalSearch search(g);
    search.dfs(0);
    std::uint64_t packed = 0;
    for (int k = 1; k < n; ++k)
        packed = (packed << k) | search.best[static_cast<std::size_t>(k)];
    return packed;
}

std::vector<Graph> enumerate_small_bipartite(int n_max) {
    if (n_max < 2 || n_max > 10)
        throw std::invalid_argument("census supports 2 <= n_max <= 10, got " +
                                    std::to_string(n_max));

    // Grow by one vertex attached to a nonempty subset of one side of the
    // parent's bipartition. Every connected bipartite graph arises this
    // way from some smaller one (remove a non-cut vertex of a spanning
    // tree), so level k+1 is complete whenever level k is.
    std::vector<Graph> level{Graph(1, {})};
    std::vector<Graph> out;
    for (int k = 1; k < n_max; ++k) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& parent : level) {
            const Bipartition bip = *bipartition(parent);
            for (const std::vector<int>& side : {bip.side_u(), bip.side_w()}) {
                if (side.empty()) continue;
                const int s = static_cast<int>(side.size());
                for (std::uint32_t pick = 1; pick < (1u << s); ++pick) {
                    std::vector<std::pair<int, int>> edges;
                    for (const Edge& e : parent.edges()) edges.emplace_back(e.u, e.v);
                    for (int i = 0; i < s; ++i)
                        if (pick >> i & 1) edges.emplace_back(side[static_cast<std::size_t>(i)], k);
                    Graph child(k + 1, std::move(edges));
                    std::uint64_t form = canonical_form(child);
                    next.try_emplace(form, std::move(child));
                }
            }
        }
        std::vector<std::pair<std::pair<int, std::uint64_t>, Graph>> ranked;
        ranked.reserve(next.size());
        for (auto& [form, graph] : next)
            ranked.emplace_back(std::pair(graph.edge_count(), form), std::move(graph));
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(ranked.size());
        for (auto& [key, graph] : ranked) level.push_back(std::move(graph));
        for (const Graph& g : level) out.push_back(g);
    }
    return out;
}

} // namespace vcw
