#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "vcw/connectivity.hpp"
#include "vcw/error.hpp"
#include "vcw/generators.hpp"
#include "vcw/graph_io.hpp"
#include "vcw/rng.hpp"

using namespace vcw;

namespace {

// Odd closed walk <=> odd cycle; trace of A^k for odd k, independent of
// the breadth-first 2-coloring used by bipartition().
bool has_odd_closed_walk(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    auto mul = [&](const auto& x, const auto& y) {
        std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (x[i][k])
                    for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    auto power = a;
    for (int len = 1; len <= n; len += 2) {
        if (len > 1) power = mul(power, mul(a, a));
        for (int i = 0; i < n; ++i)
            if (power[i][i] > 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("parse_graph reads edge lists") {
    Graph p3 = parse_graph("0 1\n1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph with_header = parse_graph("# comment\nn 5\n0 1\n\n2 1\n");
    CHECK(with_header.vertex_count() == 5);
    CHECK(with_header.edge_count() == 2);
    CHECK(with_header.degree(4) == 0);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("0 1\n0 1\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("0 1\n1 0\n"),
                         doctest::Contains("duplicate edge"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("3 3\n"), doctest::Contains("self-loop"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("0 1 2\n"), doctest::Contains("malformed"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("0 x\n"), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_AS(parse_graph("n 2\n0 5\n"), parse_error);
}

TEST_CASE("graph round trip through the document format") {
    Graph gamma = gen_gamma_pair();
    Graph again = parse_graph(format_graph(gamma));
    CHECK(again.vertex_count() == 14);
    CHECK(again.edge_count() == 15);
    CHECK(again.edges() == gamma.edges());
}

TEST_CASE("bipartition of cycles") {
    auto c4 = bipartition(testutil::make_cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->size_u() == 2);
    CHECK(c4->size_w() == 2);
    CHECK(c4->in_u(0));

    CHECK_FALSE(bipartition(testutil::make_cycle(5)).has_value());
}

TEST_CASE("bipartition of the gamma pair is 7/7") {
    auto bip = bipartition(gen_gamma_pair());
    REQUIRE(bip.has_value());
    CHECK(bip->size_u() == 7);
    CHECK(bip->size_w() == 7);
}

TEST_CASE("bipartition handles disconnected graphs per component") {
    Graph two_paths(6, {{0, 1}, {2, 3}, {4, 5}});
    auto bip = bipartition(two_paths);
    REQUIRE(bip.has_value());
    for (const Edge& e : two_paths.edges()) CHECK(bip->in_u(e.u) != bip->in_u(e.v));
}

TEST_CASE("bipartition present iff no odd closed walk, n <= 10") {
    Rng rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + rng.below(9);
        Graph g = testutil::random_graph(rng, n, 0.35);
        CHECK(bipartition(g).has_value() == !has_odd_closed_walk(g));
        CHECK(bipartition(g).has_value() == !find_odd_cycle(g).has_value());
    }
}

TEST_CASE("find_odd_cycle returns an actual odd cycle") {
    Rng rng(7);
    int produced = 0;
    while (produced < 50) {
        Graph g = testutil::random_graph(rng, 3 + rng.below(7), 0.5);
        auto cyc = find_odd_cycle(g);
        if (!cyc) continue;
        ++produced;
        CHECK(cyc->size() % 2 == 1);
        CHECK(cyc->size() >= 3);
        for (std::size_t i = 0; i < cyc->size(); ++i)
            CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
        std::set<int> distinct(cyc->begin(), cyc->end());
        CHECK(distinct.size() == cyc->size());
    }
}

TEST_CASE("connectivity predicates") {
    Graph p3 = testutil::make_path(3);
    CHECK(is_connected(p3));
    CHECK_FALSE(connected_without(p3, 1)); // middle vertex cuts
    CHECK(connected_without(p3, 0));

    Graph c4 = testutil::make_cycle(4);
    for (int v = 0; v < 4; ++v) CHECK(connected_without(c4, v));

    CHECK(is_connected(Graph(0, {})));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK_THROWS_AS(connected_without(p3, 7), std::invalid_argument);

    Graph gamma = gen_gamma_pair();
    CHECK(is_connected(gamma));
    CHECK_FALSE(connected_without(gamma, 6)); // bridge endpoint
    CHECK_FALSE(connected_without(gamma, 13));
}

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(testutil::make_cycle(4)) == 2);
    CHECK(edge_connectivity(gen_complete_bipartite(3, 5)) == 3);
    CHECK(edge_connectivity(gen_gamma_pair()) == 1);
    CHECK(edge_connectivity(testutil::make_path(2)) == 1);
    CHECK(edge_connectivity(Graph(3, {{0, 1}})) == 0);
    CHECK_THROWS_AS(edge_connectivity(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("edge connectivity bounds and removal property") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(5), 0.5);
        if (!is_connected(g) || g.edge_count() > 14) continue;
        int lambda = edge_connectivity(g);
        CHECK(lambda <= g.min_degree());
        // Removing any lambda-1 edges keeps it connected.
        if (lambda >= 2) {
            const int m = g.edge_count();
            std::vector<int> pick(lambda - 1);
            auto all_connected = [&]() {
                std::vector<char> drop(m, 0);
                for (int id : pick) drop[id] = 1;
                std::vector<std::pair<int, int>> kept;
                for (int id = 0; id < m; ++id)
                    if (!drop[id]) kept.emplace_back(g.edge(id).u, g.edge(id).v);
                return is_connected(Graph(g.vertex_count(), std::move(kept)));
            };
            auto rec = [&](auto&& self, int idx, int from) -> bool {
                if (idx == lambda - 1) return all_connected();
                for (int id = from; id < m; ++id) {
                    pick[idx] = id;
                    if (!self(self, idx + 1, id + 1)) return false;
                }
                return true;
            };
            CHECK(rec(rec, 0, 0));
        }
    }
}

TEST_CASE("theta graphs") {
    Graph k23 = gen_theta({2, 2, 2});
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(1) == 3);
    auto bip = bipartition(k23);
    REQUIRE(bip.has_value());
    CHECK(std::min(bip->size_u(), bip->size_w()) == 2);

    Graph t333 = gen_theta({3, 3, 3});
    CHECK(t333.vertex_count() == 8);
    CHECK(t333.edge_count() == 9);
    CHECK(is_two_connected(t333));

    CHECK_THROWS_AS(gen_theta({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gen_theta({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gen_theta({0, 2, 2}), std::invalid_argument);
}

TEST_CASE("theta graphs are bipartite iff the lengths share a parity") {
    for (int a = 1; a <= 4; ++a)
        for (int b = std::max(a, 2); b <= 4; ++b)
            for (int c = b; c <= 4; ++c) {
                Graph t = gen_theta({a, b, c});
                bool same_parity = (a % 2 == b % 2) && (b % 2 == c % 2);
                CHECK(bipartition(t).has_value() == same_parity);
            }
}

TEST_CASE("gamma pair structure") {
    Graph g = gen_gamma_pair();
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 15);
    CHECK(is_connected(g));
    // Exactly one edge joins the two copies, between the former pendants,
    // and it is a bridge; the only other bridges are the pendant edges.
    CHECK(g.has_edge(6, 13));
    std::set<std::pair<int, int>> bridges;
    for (int id = 0; id < g.edge_count(); ++id) {
        std::vector<std::pair<int, int>> kept;
        for (int other = 0; other < g.edge_count(); ++other)
            if (other != id) kept.emplace_back(g.edge(other).u, g.edge(other).v);
        if (!is_connected(Graph(14, std::move(kept))))
            bridges.emplace(g.edge(id).u, g.edge(id).v);
    }
    CHECK(bridges == std::set<std::pair<int, int>>{{0, 6}, {6, 13}, {7, 13}});
}

TEST_CASE("complete bipartite generator") {
    Graph g = gen_complete_bipartite(3, 5);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 15);
    CHECK(g.min_degree() == 3);
    CHECK(g.max_degree() == 5);
    CHECK_THROWS_AS(gen_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("regular bipartite generator") {
    Graph g = gen_regular_bipartite(3, 4, 11);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    REQUIRE(bipartition(g).has_value());

    Graph pm = gen_regular_bipartite(1, 2, 5);
    CHECK(pm.vertex_count() == 4);
    CHECK(pm.edge_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(pm.degree(v) == 1);

    CHECK(gen_regular_bipartite(3, 4, 7).edges() == gen_regular_bipartite(3, 4, 7).edges());
    CHECK_THROWS_AS(gen_regular_bipartite(5, 4, 1), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count across generators") {
    Rng rng(3);
    std::vector<Graph> pool{gen_gamma_pair(), gen_theta({2, 4, 2}), gen_complete_bipartite(4, 4)};
    for (int s = 0; s < 20; ++s) pool.push_back(gen_regular_bipartite(1 + s % 4, 5, 1000 + s));
    for (int s = 0; s < 20; ++s) pool.push_back(testutil::random_graph(rng, 9, 0.4));
    for (const Graph& g : pool) {
        long long total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());
    }
}
