#include "vcw/cli.hpp"

#include <sstream>
#include <stdexcept>

#include "vcw/census.hpp"
#include "vcw/error.hpp"
#include "vcw/generators.hpp"
#include "vcw/graph_io.hpp"
#include "vcw/oracle.hpp"
#include "vcw/parity.hpp"
#include "vcw/parity_factor.hpp"
#include "vcw/synthesize.hpp"

namespace vcw::cli {

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::infeasible: return 1;
        case Status::hypothesis_violation: return 2;
        case Status::error: return 3;
    }
    return 3;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::infeasible: return "infeasible";
        case Status::hypothesis_violation: return "hypothesis-violation";
        case Status::error: return "error";
    }
    return "error";
}

namespace {

CommandResult failure(Status status, const std::string& message) {
    CommandResult r;
    r.status = status;
    r.diagnostics.push_back(message);
    return r;
}

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << "}";
    return out.str();
}

} // namespace

CommandResult cmd_weight(const std::string& graph_text, const WeightOptions& options) {
    CommandResult r;
    try {
        Graph g = parse_graph(graph_text);
        SynthesisOptions sopt;
        sopt.fallback_search = options.fallback_search;
        std::optional<Weighting> wt = synthesize_weighting(g, options.set, sopt);
        if (!wt) {
            r.status = Status::infeasible;
            r.diagnostics.push_back("exhaustive search proved that no vertex-coloring {" +
                                    std::to_string(weight_set_low(options.set)) + "," +
                                    std::to_string(weight_set_high(options.set)) +
                                    "}-edge-weighting exists");
            return r;
        }
        r.payload = options.json ? format_weighting_json(g, *wt) : format_weighting(g, *wt);
    } catch (const parse_error& e) {
        return failure(Status::error, e.what());
    } catch (const hypothesis_error& e) {
        return failure(Status::hypothesis_violation,
                       std::string(e.what()) + " (re-run with --fallback-search for an exhaustive check)");
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

CommandResult cmd_verify(const std::string& graph_text, const std::string& weighting_text) {
    CommandResult r;
    try {
        Graph g = parse_graph(graph_text);
        Weighting wt = parse_weighting(weighting_text, g);
        std::vector<int> bad = verify_weighting(g, wt);
        if (bad.empty()) {
            r.payload = "ok\n";
            return r;
        }
        r.status = Status::error;
        std::vector<int> c = colors(g, wt);
        for (int id : bad)
            r.diagnostics.push_back("edge " + std::to_string(g.edge(id).u) + " " +
                                    std::to_string(g.edge(id).v) + ": both endpoints have color " +
                                    std::to_string(c[static_cast<std::size_t>(g.edge(id).u)]));
    } catch (const parse_error& e) {
        return failure(Status::error, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

CommandResult cmd_factor(const std::string& graph_text, const std::string& spec_text) {
    CommandResult r;
    try {
        Graph g = parse_graph(graph_text);
        ParitySpec spec = parse_parity_spec(spec_text, g);
        std::optional<Factor> factor = solve_parity_factor(g, spec);
        if (!factor) {
            r.status = Status::infeasible;
            r.diagnostics.push_back("no factor meets the degree prescription");
            if (g.vertex_count() <= 14) {
                if (auto cert = find_certificate(g, spec)) {
                    r.diagnostics.push_back("certificate: S=" + vertex_list(cert->s) +
                                            " T=" + vertex_list(cert->t) +
                                            " eta=" + std::to_string(cert->eta) +
                                            " tau=" + std::to_string(cert->tau));
                }
            }
            return r;
        }
        std::ostringstream out;
        out << "n " << g.vertex_count() << "\n";
        for (int id : factor->edge_ids())
            out << g.edge(id).u << " " << g.edge(id).v << "\n";
        r.payload = out.str();
        std::ostringstream degs;
        degs << "degrees:";
        for (int v = 0; v < g.vertex_count(); ++v) degs << " " << factor->degree(v);
        r.diagnostics.push_back(degs.str());
    } catch (const parse_error& e) {
        return failure(Status::error, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

CommandResult cmd_certificate(const std::string& graph_text, const std::string& spec_text,
                              int limit) {
    CommandResult r;
    try {
        Graph g = parse_graph(graph_text);
        ParitySpec spec = parse_parity_spec(spec_text, g);
        std::optional<Certificate> cert = find_certificate(g, spec, limit);
        if (!cert) {
            r.status = Status::infeasible;
            r.diagnostics.push_back(
                "every eta(S,T) is nonnegative; the degree prescription is feasible");
            return r;
        }
        std::ostringstream out;
        out << "S " << vertex_list(cert->s) << "\n"
            << "T " << vertex_list(cert->t) << "\n"
            << "eta " << cert->eta << "\n"
            << "tau " << cert->tau << "\n";
        r.payload = out.str();
    } catch (const parse_error& e) {
        return failure(Status::error, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

CommandResult cmd_gen(const std::string& family, const std::vector<long long>& params) {
    CommandResult r;
    // Structural parameters must fit an int; the seed may use the full range.
    auto as_int = [](long long p) {
        if (p < -1000000000LL || p > 1000000000LL)
            throw std::invalid_argument("parameter " + std::to_string(p) + " out of range");
        return static_cast<int>(p);
    };
    try {
        if (family == "theta") {
            std::vector<int> lengths;
            for (long long p : params) lengths.push_back(as_int(p));
            r.payload = format_graph(gen_theta(lengths));
        } else if (family == "gamma-pair") {
            if (!params.empty()) return failure(Status::error, "gamma-pair takes no parameters");
            r.payload = format_graph(gen_gamma_pair());
        } else if (family == "complete-bipartite") {
            if (params.size() != 2)
                return failure(Status::error, "complete-bipartite needs two side sizes");
            r.payload = format_graph(gen_complete_bipartite(as_int(params[0]), as_int(params[1])));
        } else if (family == "regular-bipartite") {
            if (params.size() != 2 && params.size() != 3)
                return failure(Status::error, "regular-bipartite needs R N [SEED]");
            std::uint64_t seed = params.size() == 3 ? static_cast<std::uint64_t>(params[2]) : 1;
            Graph g = gen_regular_bipartite(as_int(params[0]), as_int(params[1]), seed);
            r.payload = "# seed " + std::to_string(seed) + "\n" + format_graph(g);
        } else {
            return failure(Status::error, "unknown family '" + family +
                                              "' (theta, gamma-pair, complete-bipartite, "
                                              "regular-bipartite)");
        }
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    } catch (const std::runtime_error& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

CommandResult cmd_oracle(const std::string& graph_text, WeightSet set, int budget, bool json) {
    CommandResult r;
    try {
        Graph g = parse_graph(graph_text);
        std::optional<Weighting> wt = brute_force_weighting(g, set, budget);
        if (!wt) {
            r.status = Status::infeasible;
            r.diagnostics.push_back("all 2^" + std::to_string(g.edge_count()) +
                                    " assignments enumerated; none is vertex-coloring");
            return r;
        }
        r.payload = json ? format_weighting_json(g, *wt) : format_weighting(g, *wt);
    } catch (const parse_error& e) {
        return failure(Status::error, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(Status::error, e.what());
    }
    return r;
}

} // namespace vcw::cli
