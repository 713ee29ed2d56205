#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "vcw/connectivity.hpp"
#include "vcw/error.hpp"
#include "vcw/generators.hpp"
#include "vcw/oracle.hpp"
#include "vcw/parity_factor.hpp"
#include "vcw/synthesize.hpp"
#include "vcw/tjoin.hpp"
#include "vcw/weighting.hpp"

using namespace vcw;

namespace {

// K_{5,5} minus a perfect matching: 4-regular bipartite, both sides odd.
Graph four_regular_odd_sides() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) edges.emplace_back(i, 5 + j);
    return Graph(10, std::move(edges));
}

Weighting constant_weighting(const Graph& g, WeightSet set, int value) {
    Weighting wt;
    wt.set = set;
    wt.w.assign(static_cast<std::size_t>(g.edge_count()), value);
    return wt;
}

void check_parity_split(const Graph& g, const Bipartition& bip, Side side, const Weighting& wt) {
    std::vector<int> c = colors(g, wt);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool odd_target = (side == Side::u) == bip.in_u(v);
        CHECK((c[static_cast<std::size_t>(v)] % 2 != 0) == odd_target);
    }
}

} // namespace

TEST_CASE("verify_weighting on the spec examples") {
    Graph p3 = testutil::make_path(3);
    Weighting wt;
    wt.set = WeightSet::one_two;
    wt.w = {1, 2};
    CHECK(verify_weighting(p3, wt).empty());
    CHECK(colors(p3, wt) == std::vector<int>{1, 3, 2});

    Graph k2 = testutil::make_path(2);
    for (int value : {1, 2})
        CHECK(verify_weighting(k2, constant_weighting(k2, WeightSet::one_two, value)).size() == 1);

    Graph c4 = testutil::make_cycle(4);
    CHECK(verify_weighting(c4, constant_weighting(c4, WeightSet::one_two, 1)).size() == 4);

    Weighting bad;
    bad.set = WeightSet::zero_one;
    bad.w = {0, 2};
    CHECK_THROWS_AS(verify_weighting(p3, bad), std::invalid_argument);
    Weighting short_cover;
    short_cover.set = WeightSet::one_two;
    short_cover.w = {1};
    CHECK_THROWS_AS(verify_weighting(p3, short_cover), std::invalid_argument);
}

TEST_CASE("t-join weighting on P3 and C4") {
    Graph p3 = testutil::make_path(3);
    Bipartition bip = *bipartition(p3); // U = {0,2}, W = {1}
    Weighting wt = tjoin_weighting(p3, bip, Side::u, WeightSet::one_two);
    CHECK(colors(p3, wt) == std::vector<int>{1, 2, 1});
    CHECK(verify_weighting(p3, wt).empty());

    Graph c4 = testutil::make_cycle(4);
    Bipartition cbip = *bipartition(c4);
    Weighting cw = tjoin_weighting(c4, cbip, Side::u, WeightSet::one_two);
    // The join is two edges sharing one W-vertex.
    std::vector<int> join_degree(4, 0);
    int join_size = 0;
    for (int id = 0; id < 4; ++id)
        if (cw.weight(id) == 1) {
            ++join_size;
            ++join_degree[static_cast<std::size_t>(c4.edge(id).u)];
            ++join_degree[static_cast<std::size_t>(c4.edge(id).v)];
        }
    CHECK(join_size == 2);
    int shared = -1;
    for (int v = 0; v < 4; ++v)
        if (join_degree[static_cast<std::size_t>(v)] == 2) shared = v;
    REQUIRE(shared != -1);
    CHECK_FALSE(cbip.in_u(shared));
    check_parity_split(c4, cbip, Side::u, cw);
    CHECK(verify_weighting(c4, cw).empty());
}

TEST_CASE("t-join weighting error paths") {
    Graph p3 = testutil::make_path(3);
    Bipartition bip = *bipartition(p3);
    CHECK_THROWS_AS(tjoin_weighting(p3, bip, Side::w, WeightSet::one_two),
                    std::invalid_argument); // |W| = 1 is odd
    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(tjoin_weighting(split, *bipartition(split), Side::u, WeightSet::one_two),
                    std::invalid_argument);
    CHECK_THROWS_AS(tjoin_weighting(Graph(1, {}), Bipartition{{0}}, Side::u, WeightSet::one_two),
                    std::invalid_argument);
}

TEST_CASE("t-join weighting parity split over random connected bipartite graphs") {
    Rng rng(60601);
    int covered = 0;
    while (covered < 250) {
        int n = 2 + rng.below(11);
        Graph g = testutil::random_bipartite(rng, n, 0.5);
        if (!is_connected(g) || g.edge_count() == 0) continue;
        Bipartition bip = *bipartition(g);
        Side side;
        if (bip.size_u() % 2 == 0)
            side = Side::u;
        else if (bip.size_w() % 2 == 0)
            side = Side::w;
        else
            continue;
        ++covered;
        for (WeightSet set : {WeightSet::one_two, WeightSet::zero_one}) {
            Weighting wt = tjoin_weighting(g, bip, side, set);
            CHECK(verify_weighting(g, wt).empty());
            check_parity_split(g, bip, side, wt);
        }
    }
}

TEST_CASE("anchor spec for the {1,2} route on K_{3,5}") {
    Graph g = gen_complete_bipartite(3, 5);
    Bipartition bip = *bipartition(g);
    ParitySpec spec = spec_for_weight12(g, bip, 3); // u on the 5-side, degree 3
    // delta=3, Delta=5 -> M=5, m=-1; no degree-3 neighbors of u.
    CHECK(spec.lower(3) == 3);
    CHECK(spec.upper(3) == 5);
    for (int w : {0, 1, 2}) {
        CHECK(spec.lower(w) == -1);
        CHECK(spec.upper(w) == 5);
    }
    for (int x : {4, 5, 6, 7}) {
        CHECK(spec.lower(x) == -2);
        CHECK(spec.upper(x) == 6);
    }
}

TEST_CASE("anchor spec for the {1,2} route on a 4-regular graph") {
    Graph g = four_regular_odd_sides();
    Bipartition bip = *bipartition(g);
    ParitySpec spec = spec_for_weight12(g, bip, 0);
    // delta = Delta = 4 -> M = 4, m = 0; every neighbor has degree 4.
    CHECK(spec.lower(0) == 4);
    CHECK(spec.upper(0) == 4);
    for (int y : g.neighbors(0)) {
        CHECK(spec.lower(y) == 0);
        CHECK(spec.upper(y) == 2);
    }
    for (int x = 1; x < 5; ++x) {
        CHECK(spec.lower(x) == -1);
        CHECK(spec.upper(x) == 5);
    }
}

TEST_CASE("anchor spec for the {0,1} route on K_{3,5}") {
    Graph g = gen_complete_bipartite(3, 5);
    Bipartition bip = *bipartition(g);
    ParitySpec spec = spec_for_weight01(g, bip, 3); // M = 6
    CHECK(spec.lower(3) == 0);
    CHECK(spec.upper(3) == 0);
    for (int w : {0, 1, 2}) {
        CHECK(spec.lower(w) == 2);
        CHECK(spec.upper(w) == 6);
    }
    for (int x : {4, 5, 6, 7}) {
        CHECK(spec.lower(x) == -1);
        CHECK(spec.upper(x) == 7);
    }
}

TEST_CASE("anchor spec preconditions") {
    Graph g = gen_complete_bipartite(3, 5);
    Bipartition bip = *bipartition(g);
    CHECK_THROWS_AS(spec_for_weight12(g, bip, 0), std::invalid_argument); // degree 5 != delta
    Graph even_side = gen_complete_bipartite(2, 3);
    CHECK_THROWS_AS(spec_for_weight12(even_side, *bipartition(even_side), 0),
                    std::invalid_argument); // side sizes 2/3
}

TEST_CASE("factors for the anchor specs satisfy the route conclusions") {
    Graph g = gen_complete_bipartite(3, 5);
    Bipartition bip = *bipartition(g);

    auto f12 = solve_parity_factor(g, spec_for_weight12(g, bip, 3));
    REQUIRE(f12.has_value());
    CHECK(f12->degree(3) == 3);
    for (int x : {4, 5, 6, 7}) CHECK(f12->degree(x) % 2 == 0); // delta+1 = 4 parity
    for (int w : {0, 1, 2}) CHECK(f12->degree(w) % 2 == 1);    // delta parity

    auto f01 = solve_parity_factor(g, spec_for_weight01(g, bip, 3));
    REQUIRE(f01.has_value());
    CHECK(f01->degree(3) == 0);
    for (int x : {4, 5, 6, 7}) CHECK(f01->degree(x) % 2 == 1);
    for (int w : {0, 1, 2}) {
        CHECK(f01->degree(w) % 2 == 0);
        CHECK(f01->degree(w) >= 2);
    }
}

TEST_CASE("select_vertex on the spec examples") {
    Graph k35 = gen_complete_bipartite(3, 5);
    Bipartition b35 = *bipartition(k35);
    CHECK(select_vertex(k35, b35, WeightSet::one_two) == 3);
    CHECK(select_vertex(k35, b35, WeightSet::zero_one) == 3);

    Graph k33 = gen_complete_bipartite(3, 3);
    Bipartition b33 = *bipartition(k33);
    CHECK_FALSE(select_vertex(k33, b33, WeightSet::zero_one).has_value());
    CHECK_FALSE(select_vertex(k33, b33, WeightSet::one_two).has_value());

    Graph k45 = gen_complete_bipartite(4, 5);
    Bipartition b45 = *bipartition(k45);
    CHECK(select_vertex(k45, b45, WeightSet::one_two) == 4);
    CHECK(select_vertex(k45, b45, WeightSet::zero_one) == 4);

    Graph c4 = testutil::make_cycle(4);
    CHECK_THROWS_AS(select_vertex(c4, *bipartition(c4), WeightSet::one_two), hypothesis_error);
}

TEST_CASE("synthesize_weighting routes") {
    // (a) even side via t-join.
    Graph c4 = testutil::make_cycle(4);
    auto wc4 = synthesize_weighting(c4, WeightSet::one_two);
    REQUIRE(wc4.has_value());
    CHECK(verify_weighting(c4, *wc4).empty());

    // (c) odd-odd anchored routes on K_{3,5}.
    Graph k35 = gen_complete_bipartite(3, 5);
    auto w01 = synthesize_weighting(k35, WeightSet::zero_one);
    REQUIRE(w01.has_value());
    CHECK(verify_weighting(k35, *w01).empty());
    std::vector<int> c01 = colors(k35, *w01);
    CHECK(c01[3] == 0); // anchor vertex
    for (int y : k35.neighbors(3)) CHECK(c01[static_cast<std::size_t>(y)] >= 2);
    for (int x : {4, 5, 6, 7}) CHECK(c01[static_cast<std::size_t>(x)] % 2 == 1);
    for (int w : {0, 1, 2}) CHECK(c01[static_cast<std::size_t>(w)] % 2 == 0);

    auto w12 = synthesize_weighting(k35, WeightSet::one_two);
    REQUIRE(w12.has_value());
    CHECK(verify_weighting(k35, *w12).empty());
    std::vector<int> c12 = colors(k35, *w12);
    CHECK(c12[3] == 3); // anchor color = delta
    for (int y : k35.neighbors(3)) CHECK(c12[static_cast<std::size_t>(y)] > 3);
    for (int x : {4, 5, 6, 7}) CHECK(c12[static_cast<std::size_t>(x)] % 2 == 0);
    for (int w : {0, 1, 2}) CHECK(c12[static_cast<std::size_t>(w)] % 2 == 1);

    // (b) regular odd-odd route.
    Graph k33 = gen_complete_bipartite(3, 3);
    for (WeightSet set : {WeightSet::one_two, WeightSet::zero_one}) {
        auto wt = synthesize_weighting(k33, set);
        REQUIRE(wt.has_value());
        CHECK(verify_weighting(k33, *wt).empty());
    }
    Graph reg4 = four_regular_odd_sides();
    for (WeightSet set : {WeightSet::one_two, WeightSet::zero_one}) {
        auto wt = synthesize_weighting(reg4, set);
        REQUIRE(wt.has_value());
        CHECK(verify_weighting(reg4, *wt).empty());
    }
}

TEST_CASE("synthesize_weighting domain and hypothesis failures") {
    Graph c5 = testutil::make_cycle(5);
    CHECK_THROWS_WITH_AS(synthesize_weighting(c5, WeightSet::one_two),
                         doctest::Contains("odd cycle"), std::invalid_argument);

    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(synthesize_weighting(split, WeightSet::one_two), std::invalid_argument);

    Graph k2 = testutil::make_path(2);
    CHECK_THROWS_AS(synthesize_weighting(k2, WeightSet::one_two), hypothesis_error);
    SynthesisOptions fallback;
    fallback.fallback_search = true;
    CHECK_FALSE(synthesize_weighting(k2, WeightSet::one_two, fallback).has_value());

    Graph single(1, {});
    auto empty = synthesize_weighting(single, WeightSet::zero_one);
    REQUIRE(empty.has_value());
    CHECK(empty->w.empty());

    // Gamma pair: both sides odd, bridge, not 3-edge-connected.
    Graph gamma = gen_gamma_pair();
    CHECK_THROWS_AS(synthesize_weighting(gamma, WeightSet::zero_one), hypothesis_error);
    CHECK_FALSE(synthesize_weighting(gamma, WeightSet::zero_one, fallback).has_value());
    auto rescued = synthesize_weighting(gamma, WeightSet::one_two, fallback);
    REQUIRE(rescued.has_value());
    CHECK(verify_weighting(gamma, *rescued).empty());
}

TEST_CASE("synthesis succeeds on sampled 2-connected 3-edge-connected graphs up to n = 12") {
    Rng rng(1123581321);
    int covered = 0;
    while (covered < 40) {
        int n = 4 + rng.below(9);
        Graph g = testutil::random_bipartite(rng, n, 0.65);
        if (!is_connected(g) || !is_two_connected(g) || edge_connectivity(g) < 3) continue;
        ++covered;
        for (WeightSet set : {WeightSet::one_two, WeightSet::zero_one}) {
            auto wt = synthesize_weighting(g, set);
            REQUIRE(wt.has_value());
            CHECK(verify_weighting(g, *wt).empty());
        }
    }
}

TEST_CASE("regular shift preserves the violation set") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen_regular_bipartite(3, 5, 9000 + trial);
        Weighting wt;
        wt.set = WeightSet::one_two;
        for (int id = 0; id < g.edge_count(); ++id) wt.w.push_back(1 + rng.below(2));
        Weighting shifted = shift_one_two_to_zero_one(g, wt);
        CHECK(verify_weighting(g, wt) == verify_weighting(g, shifted));
        std::vector<int> before = colors(g, wt);
        std::vector<int> after = colors(g, shifted);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(before[static_cast<std::size_t>(v)] - after[static_cast<std::size_t>(v)] == 3);
    }
}

TEST_CASE("weighting document round trip") {
    Graph k35 = gen_complete_bipartite(3, 5);
    auto wt = synthesize_weighting(k35, WeightSet::zero_one);
    REQUIRE(wt.has_value());
    Weighting back = parse_weighting(format_weighting(k35, *wt), k35);
    CHECK(back.set == wt->set);
    CHECK(back.w == wt->w);

    Graph p3 = testutil::make_path(3);
    CHECK_THROWS_AS(parse_weighting("0 1 1\n", p3), parse_error);            // missing edge
    CHECK_THROWS_AS(parse_weighting("0 1 1\n1 2 1\n0 2 1\n", p3), parse_error); // unknown edge
    CHECK_THROWS_AS(parse_weighting("0 1 1\n1 2 1\nc 0 5\n", p3), parse_error); // wrong color
    Weighting inferred = parse_weighting("0 1 0\n1 2 1\n", p3);
    CHECK(inferred.set == WeightSet::zero_one);
}
