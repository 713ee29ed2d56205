#include "vcw/parity_factor.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "vcw/matching.hpp"

namespace vcw {

namespace {

void check_spec_size(const Graph& g, const ParitySpec& spec) {
    if (spec.size() != g.vertex_count())
        throw std::invalid_argument("parity spec covers " + std::to_string(spec.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
}

} // namespace

MatchingReduction reduce_to_matching(const Graph& g, const ParitySpec& spec) {
    check_spec_size(g, spec);
    const int n = g.vertex_count();

    MatchingReduction out;
    for (int v = 0; v < n; ++v)
        if (spec.lower(v) > g.degree(v)) out.infeasible_vertices.push_back(v);
    if (!out.infeasible_vertices.empty()) {
        out.infeasible = true;
        return out;
    }

    // Augmented-graph vertices: originals, then the slack pairs of each
    // vertex in order. aug_edges lists every augmented edge as
    // (a, b, original edge id or -1); incidences are recorded per vertex
    // in a fixed order so external slots are deterministic.
    struct AugVertex {
        int target = 0;
        std::vector<int> incident; // augmented edge ids
    };
    std::vector<AugVertex> aug;
    std::vector<std::array<int, 2>> aug_edges;
    std::vector<int> aug_origin;

    aug.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) aug[static_cast<std::size_t>(v)].target = spec.upper(v);

    auto add_aug_edge = [&](int a, int b, int origin) {
        int id = static_cast<int>(aug_edges.size());
        aug_edges.push_back({a, b});
        aug_origin.push_back(origin);
        aug[static_cast<std::size_t>(a)].incident.push_back(id);
        aug[static_cast<std::size_t>(b)].incident.push_back(id);
        return id;
    };

    for (int id = 0; id < g.edge_count(); ++id) add_aug_edge(g.edge(id).u, g.edge(id).v, id);
    for (int v = 0; v < n; ++v) {
        const int slack = (spec.upper(v) - spec.lower(v)) / 2;
        for (int j = 0; j < slack; ++j) {
            int x = static_cast<int>(aug.size());
            aug.push_back(AugVertex{1, {}});
            int y = static_cast<int>(aug.size());
            aug.push_back(AugVertex{1, {}});
            add_aug_edge(v, x, -1);
            add_aug_edge(v, y, -1);
            add_aug_edge(x, y, -1);
        }
    }

    // Layer 2: external block then internal block per augmented vertex.
    const int aug_n = static_cast<int>(aug.size());
    std::vector<int> ext_base(static_cast<std::size_t>(aug_n), 0);
    std::vector<int> int_base(static_cast<std::size_t>(aug_n), 0);
    int h_n = 0;
    for (int w = 0; w < aug_n; ++w) {
        const auto& a = aug[static_cast<std::size_t>(w)];
        const int deg = static_cast<int>(a.incident.size());
        ext_base[static_cast<std::size_t>(w)] = h_n;
        h_n += deg;
        int_base[static_cast<std::size_t>(w)] = h_n;
        h_n += deg - a.target; // deg >= target was checked above
    }

    // External slot of augmented edge id at endpoint w.
    auto ext_slot = [&](int w, int id) {
        const auto& inc = aug[static_cast<std::size_t>(w)].incident;
        for (int k = 0; k < static_cast<int>(inc.size()); ++k)
            if (inc[static_cast<std::size_t>(k)] == id) return ext_base[static_cast<std::size_t>(w)] + k;
        throw std::logic_error("augmented edge not incident to its endpoint");
    };

    std::vector<std::pair<int, int>> h_edges;
    std::vector<int> back;
    for (int id = 0; id < static_cast<int>(aug_edges.size()); ++id) {
        auto [a, b] = aug_edges[static_cast<std::size_t>(id)];
        h_edges.emplace_back(ext_slot(a, id), ext_slot(b, id));
        back.push_back(aug_origin[static_cast<std::size_t>(id)]);
    }
    for (int w = 0; w < aug_n; ++w) {
        const auto& a = aug[static_cast<std::size_t>(w)];
        const int deg = static_cast<int>(a.incident.size());
        for (int i = 0; i < deg - a.target; ++i) {
            for (int k = 0; k < deg; ++k) {
                h_edges.emplace_back(int_base[static_cast<std::size_t>(w)] + i,
                                     ext_base[static_cast<std::size_t>(w)] + k);
                back.push_back(-1);
            }
        }
    }

    Graph h(h_n, std::move(h_edges));
    // Graph construction sorts edges; rebuild back_map keyed by h edge id.
    out.back_map.assign(static_cast<std::size_t>(h.edge_count()), -1);
    {
        // Recompute: pair order above matches (a,b) with a<b not guaranteed,
        // so map through edge_index.
        std::size_t idx = 0;
        for (int id = 0; id < static_cast<int>(aug_edges.size()); ++id, ++idx) {
            auto [a, b] = aug_edges[static_cast<std::size_t>(id)];
            int he = h.edge_index(ext_slot(a, id), ext_slot(b, id));
            out.back_map[static_cast<std::size_t>(he)] = aug_origin[static_cast<std::size_t>(id)];
        }
    }
    out.h = std::move(h);
    return out;
}

std::optional<Factor> solve_parity_factor(const Graph& g, const ParitySpec& spec) {
    MatchingReduction red = reduce_to_matching(g, spec);
    if (red.infeasible) return std::nullopt;
    if (red.h.vertex_count() % 2 != 0) return std::nullopt;

    std::vector<int> mate = max_matching_mates(red.h);
    for (int v = 0; v < red.h.vertex_count(); ++v)
        if (mate[static_cast<std::size_t>(v)] == -1) return std::nullopt;

    std::vector<int> ids;
    for (int he = 0; he < red.h.edge_count(); ++he) {
        if (red.back_map[static_cast<std::size_t>(he)] < 0) continue;
        const Edge& e = red.h.edge(he);
        if (mate[static_cast<std::size_t>(e.u)] == e.v)
            ids.push_back(red.back_map[static_cast<std::size_t>(he)]);
    }
    Factor factor(g, std::move(ids));
    if (!factor.satisfies(spec))
        throw std::logic_error("matching reduction produced a factor outside its spec");
    return factor;
}

} // namespace vcw
