#include "vcw/generators.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "vcw/rng.hpp"

namespace vcw {

Graph gen_theta(const std::vector<int>& lengths) {
    if (lengths.size() < 3)
        throw std::invalid_argument("theta graph needs at least 3 path lengths");
    int ones = 0;
    for (int len : lengths) {
        if (len < 1) throw std::invalid_argument("path length must be >= 1");
        if (len == 1) ++ones;
    }
    if (ones > 1) throw std::invalid_argument("at most one path of length 1 (simple graph)");

    std::vector<std::pair<int, int>> edges;
    int next = 2; // 0 and 1 are the hubs
    for (int len : lengths) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph(next, std::move(edges));
}

Graph gen_gamma_pair() {
    std::vector<std::pair<int, int>> edges;
    for (int base : {0, 7}) {
        for (int i = 0; i < 6; ++i) edges.emplace_back(base + i, base + (i + 1) % 6);
        edges.emplace_back(base, base + 6); // pendant
    }
    edges.emplace_back(6, 13); // bridge between the two former degree-1 vertices
    return Graph(14, std::move(edges));
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph gen_regular_bipartite(int r, int n, std::uint64_t seed) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("need 1 <= r <= n for a regular bipartite graph");
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < kRegularRetryBudget; ++attempt) {
        std::set<std::pair<int, int>> used;
        bool clash = false;
        for (int m = 0; m < r && !clash; ++m) {
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            for (int i = 0; i < n; ++i) {
                if (!used.emplace(i, n + perm[static_cast<std::size_t>(i)]).second) {
                    clash = true;
                    break;
                }
            }
        }
        if (!clash)
            return Graph(2 * n, std::vector<std::pair<int, int>>(used.begin(), used.end()));
    }
    throw std::runtime_error("regular bipartite generation failed after " +
                             std::to_string(kRegularRetryBudget) + " attempts (r=" +
                             std::to_string(r) + ", n=" + std::to_string(n) + ")");
}

} // namespace vcw
