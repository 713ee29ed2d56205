#include "vcw/synthesize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcw/connectivity.hpp"
#include "vcw/error.hpp"
#include "vcw/oracle.hpp"
#include "vcw/parity_factor.hpp"

namespace vcw {

namespace {

int side_of(const Bipartition& bip, int u) { return bip.in_u(u) ? 0 : 1; }

void check_anchor(const Graph& g, const Bipartition& bip, int u) {
    g.check_vertex(u);
    if (static_cast<int>(bip.side.size()) != g.vertex_count())
        throw std::invalid_argument("bipartition does not match the graph");
    if (g.degree(u) != g.min_degree())
        throw std::invalid_argument("anchor vertex " + std::to_string(u) +
                                    " has degree " + std::to_string(g.degree(u)) +
                                    ", minimum degree is " + std::to_string(g.min_degree()));
    if (bip.size_u() % 2 == 0 || bip.size_w() % 2 == 0)
        throw std::invalid_argument("both sides must have odd cardinality");
}

} // namespace

ParitySpec spec_for_weight12(const Graph& g, const Bipartition& bip, int u) {
    check_anchor(g, bip, u);
    const int n = g.vertex_count();
    const int delta = g.min_degree();
    const int max_deg = g.max_degree();
    const int big = max_deg + ((max_deg - delta) % 2 == 0 ? 0 : 1); // >= Delta, = delta (mod 2)
    const int low = delta % 2 == 0 ? 0 : -1;                        // in {0,-1}, = delta (mod 2)
    const int u_side = side_of(bip, u);

    std::vector<char> low_neighbor(static_cast<std::size_t>(n), 0);
    for (int y : neighbors_with_degree(g, u, delta)) low_neighbor[static_cast<std::size_t>(y)] = 1;

    std::vector<int> lower(static_cast<std::size_t>(n), 0);
    std::vector<int> upper(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const bool same_side = side_of(bip, v) == u_side;
        if (v == u) {
            lower[static_cast<std::size_t>(v)] = delta;
            upper[static_cast<std::size_t>(v)] = big;
        } else if (same_side) {
            lower[static_cast<std::size_t>(v)] = low - 1;
            upper[static_cast<std::size_t>(v)] = big + 1;
        } else {
            lower[static_cast<std::size_t>(v)] = low;
            upper[static_cast<std::size_t>(v)] =
                low_neighbor[static_cast<std::size_t>(v)] ? delta - 2 : big;
        }
    }
    return ParitySpec(std::move(lower), std::move(upper));
}

ParitySpec spec_for_weight01(const Graph& g, const Bipartition& bip, int u) {
    check_anchor(g, bip, u);
    const int n = g.vertex_count();
    const int max_deg = g.max_degree();
    const int big = max_deg + (max_deg % 2); // smallest even integer >= Delta
    const int u_side = side_of(bip, u);

    std::vector<char> neighbor(static_cast<std::size_t>(n), 0);
    for (int y : g.neighbors(u)) neighbor[static_cast<std::size_t>(y)] = 1;

    std::vector<int> lower(static_cast<std::size_t>(n), 0);
    std::vector<int> upper(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const bool same_side = side_of(bip, v) == u_side;
        if (v == u) {
            lower[static_cast<std::size_t>(v)] = 0;
            upper[static_cast<std::size_t>(v)] = 0;
        } else if (same_side) {
            lower[static_cast<std::size_t>(v)] = -1;
            upper[static_cast<std::size_t>(v)] = big + 1;
        } else {
            lower[static_cast<std::size_t>(v)] = neighbor[static_cast<std::size_t>(v)] ? 2 : 0;
            upper[static_cast<std::size_t>(v)] = big;
        }
    }
    return ParitySpec(std::move(lower), std::move(upper));
}

std::optional<int> select_vertex(const Graph& g, const Bipartition& bip, WeightSet mode) {
    if (static_cast<int>(bip.side.size()) != g.vertex_count())
        throw std::invalid_argument("bipartition does not match the graph");
    if (!is_connected(g)) throw hypothesis_error("graph is not connected");
    const int lambda = g.vertex_count() >= 2 ? edge_connectivity(g) : 0;
    if (lambda < 3)
        throw hypothesis_error("graph is not 3-edge-connected (edge connectivity " +
                               std::to_string(lambda) + ")");
    const int delta = g.min_degree();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != delta) continue;
        if (!connected_without(g, v)) continue;
        if (delta == 3) {
            if (mode == WeightSet::one_two &&
                static_cast<int>(neighbors_with_degree(g, v, 3).size()) > 2)
                continue;
            if (mode == WeightSet::zero_one) {
                bool high_neighbor = false;
                for (int y : g.neighbors(v)) high_neighbor |= g.degree(y) > 3;
                if (!high_neighbor) continue;
            }
        }
        return v;
    }
    return std::nullopt;
}

std::optional<Weighting> search_weighting12(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> partial(static_cast<std::size_t>(n), 0);
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> w(static_cast<std::size_t>(m), 0);

    // An endpoint whose last edge was just fixed must differ from every
    // finished neighbor; an endpoint down to one open edge must still have
    // a viable color among partial+1 and partial+2.
    auto consistent = [&](int x) {
        if (remaining[static_cast<std::size_t>(x)] == 0) {
            for (int y : g.neighbors(x))
                if (remaining[static_cast<std::size_t>(y)] == 0 &&
                    partial[static_cast<std::size_t>(y)] == partial[static_cast<std::size_t>(x)])
                    return false;
        } else if (remaining[static_cast<std::size_t>(x)] == 1) {
            bool low_ok = true, high_ok = true;
            for (int y : g.neighbors(x)) {
                if (remaining[static_cast<std::size_t>(y)] != 0) continue;
                if (partial[static_cast<std::size_t>(y)] == partial[static_cast<std::size_t>(x)] + 1)
                    low_ok = false;
                if (partial[static_cast<std::size_t>(y)] == partial[static_cast<std::size_t>(x)] + 2)
                    high_ok = false;
            }
            if (!low_ok && !high_ok) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int id) -> bool {
        if (id == m) return true;
        const Edge& e = g.edge(id);
        for (int value : {1, 2}) {
            w[static_cast<std::size_t>(id)] = value;
            partial[static_cast<std::size_t>(e.u)] += value;
            partial[static_cast<std::size_t>(e.v)] += value;
            --remaining[static_cast<std::size_t>(e.u)];
            --remaining[static_cast<std::size_t>(e.v)];
            bool ok = consistent(e.u) && consistent(e.v);
            if (ok && self(self, id + 1)) return true;
            partial[static_cast<std::size_t>(e.u)] -= value;
            partial[static_cast<std::size_t>(e.v)] -= value;
            ++remaining[static_cast<std::size_t>(e.u)];
            ++remaining[static_cast<std::size_t>(e.v)];
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    Weighting wt;
    wt.set = WeightSet::one_two;
    wt.w = std::move(w);
    return wt;
}

Weighting shift_one_two_to_zero_one(const Graph& g, const Weighting& wt) {
    if (wt.set != WeightSet::one_two)
        throw std::invalid_argument("shift expects a {1,2}-weighting");
    if (static_cast<int>(wt.w.size()) != g.edge_count())
        throw std::invalid_argument("weighting does not cover the graph");
    Weighting out;
    out.set = WeightSet::zero_one;
    out.w.reserve(wt.w.size());
    for (int x : wt.w) out.w.push_back(x - 1);
    return out;
}

namespace {

std::optional<Weighting> finish(const Graph& g, Weighting wt) {
    if (!verify_weighting(g, wt).empty())
        throw std::logic_error("synthesized weighting failed verification");
    return wt;
}

std::optional<Weighting> fallback_or_throw(const Graph& g, WeightSet set,
                                           const SynthesisOptions& options,
                                           const std::string& reason) {
    if (!options.fallback_search) throw hypothesis_error(reason);
    std::optional<Weighting> found = brute_force_weighting(g, set, options.fallback_budget);
    if (!found) return std::nullopt;
    return finish(g, std::move(*found));
}

} // namespace

std::optional<Weighting> synthesize_weighting(const Graph& g, WeightSet target_set,
                                              const SynthesisOptions& options) {
    std::optional<Bipartition> bip = bipartition(g);
    if (!bip) {
        std::ostringstream msg;
        msg << "graph is not bipartite; odd cycle:";
        for (int v : *find_odd_cycle(g)) msg << " " << v;
        throw std::invalid_argument(msg.str());
    }
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    if (g.edge_count() == 0) { // nothing to weight, vacuously proper
        Weighting wt;
        wt.set = target_set;
        return wt;
    }
    if (g.vertex_count() == 2)
        return fallback_or_throw(g, target_set, options,
                                 "an isolated edge admits no vertex-coloring weighting");

    // (a) A side of even cardinality; with both even, U (the side of
    // vertex 0) gets the odd colors.
    if (bip->size_u() % 2 == 0)
        return finish(g, tjoin_weighting(g, *bip, Side::u, target_set));
    if (bip->size_w() % 2 == 0)
        return finish(g, tjoin_weighting(g, *bip, Side::w, target_set));

    // (b) Regular: exhaustive {1,2} search, shifted for {0,1}.
    const int delta = g.min_degree();
    if (delta == g.max_degree() && delta >= 3) {
        std::optional<Weighting> base = search_weighting12(g);
        if (!base) return std::nullopt; // completed search: honest absence
        if (target_set == WeightSet::zero_one)
            return finish(g, shift_one_two_to_zero_one(g, *base));
        return finish(g, std::move(*base));
    }

    // (c) Anchor vertex and parity factor.
    std::optional<int> anchor;
    try {
        anchor = select_vertex(g, *bip, target_set);
    } catch (const hypothesis_error& e) {
        return fallback_or_throw(g, target_set, options, e.what());
    }
    if (!anchor)
        return fallback_or_throw(g, target_set, options,
                                 "no minimum-degree vertex qualifies as an anchor");
    const ParitySpec spec = target_set == WeightSet::one_two
                                ? spec_for_weight12(g, *bip, *anchor)
                                : spec_for_weight01(g, *bip, *anchor);
    std::optional<Factor> factor = solve_parity_factor(g, spec);
    if (!factor)
        return fallback_or_throw(g, target_set, options,
                                 "parity factor infeasible at anchor vertex " +
                                     std::to_string(*anchor));
    Weighting wt;
    wt.set = target_set;
    const int other = target_set == WeightSet::one_two ? 2 : 0;
    wt.w.assign(static_cast<std::size_t>(g.edge_count()), other);
    for (int id : factor->edge_ids()) wt.w[static_cast<std::size_t>(id)] = 1;
    return finish(g, std::move(wt));
}

} // namespace vcw
