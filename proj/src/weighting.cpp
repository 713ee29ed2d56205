#include "vcw/weighting.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vcw/error.hpp"

namespace vcw {

int weight_set_low(WeightSet s) { return s == WeightSet::zero_one ? 0 : 1; }
int weight_set_high(WeightSet s) { return s == WeightSet::zero_one ? 1 : 2; }
std::string weight_set_name(WeightSet s) { return s == WeightSet::zero_one ? "01" : "12"; }

namespace {

void check_cover(const Graph& g, const Weighting& wt) {
    if (static_cast<int>(wt.w.size()) != g.edge_count())
        throw std::invalid_argument("weighting covers " + std::to_string(wt.w.size()) +
                                    " edges, graph has " + std::to_string(g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id) {
        int w = wt.weight(id);
        if (w != weight_set_low(wt.set) && w != weight_set_high(wt.set))
            throw std::invalid_argument("weight " + std::to_string(w) + " on edge " +
                                        std::to_string(g.edge(id).u) + " " +
                                        std::to_string(g.edge(id).v) + " lies outside {" +
                                        std::to_string(weight_set_low(wt.set)) + "," +
                                        std::to_string(weight_set_high(wt.set)) + "}");
    }
}

} // namespace

std::vector<int> colors(const Graph& g, const Weighting& wt) {
    check_cover(g, wt);
    std::vector<int> c(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        c[static_cast<std::size_t>(g.edge(id).u)] += wt.weight(id);
        c[static_cast<std::size_t>(g.edge(id).v)] += wt.weight(id);
    }
    return c;
}

std::vector<int> verify_weighting(const Graph& g, const Weighting& wt) {
    std::vector<int> c = colors(g, wt);
    std::vector<int> bad;
    for (int id = 0; id < g.edge_count(); ++id)
        if (c[static_cast<std::size_t>(g.edge(id).u)] == c[static_cast<std::size_t>(g.edge(id).v)])
            bad.push_back(id);
    return bad;
}

std::string format_weighting(const Graph& g, const Weighting& wt) {
    std::vector<int> c = colors(g, wt);
    std::ostringstream out;
    out << "# set " << weight_set_name(wt.set) << "\n";
    for (int id = 0; id < g.edge_count(); ++id)
        out << g.edge(id).u << " " << g.edge(id).v << " " << wt.weight(id) << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "c " << v << " " << c[static_cast<std::size_t>(v)] << "\n";
    return out.str();
}

std::string format_weighting_json(const Graph& g, const Weighting& wt) {
    std::vector<int> c = colors(g, wt);
    nlohmann::json j;
    j["weight_set"] = {weight_set_low(wt.set), weight_set_high(wt.set)};
    j["edges"] = nlohmann::json::array();
    for (int id = 0; id < g.edge_count(); ++id)
        j["edges"].push_back({g.edge(id).u, g.edge(id).v, wt.weight(id)});
    j["colors"] = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        j["colors"][std::to_string(v)] = c[static_cast<std::size_t>(v)];
    return j.dump(2) + "\n";
}

Weighting parse_weighting(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    Weighting wt;
    wt.w.assign(static_cast<std::size_t>(g.edge_count()), -1);
    bool set_declared = false;
    bool saw_zero = false, saw_two = false;
    std::vector<std::pair<int, int>> claimed_colors;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        std::string body = line;
        // "# set .." is meaningful; other comments are skipped.
        auto hash = body.find('#');
        if (hash != std::string::npos) {
            std::istringstream cs(body.substr(hash + 1));
            std::string kw, val;
            if (cs >> kw >> val && kw == "set") {
                if (val == "01")
                    wt.set = WeightSet::zero_one, set_declared = true;
                else if (val == "12")
                    wt.set = WeightSet::one_two, set_declared = true;
                else
                    throw parse_error("line " + std::to_string(line_no) + ": unknown weight set '" +
                                      val + "'");
            }
            body.erase(hash);
        }
        std::istringstream ls(body);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            int v = 0, col = 0;
            std::string extra;
            if (!(ls >> v >> col) || (ls >> extra))
                throw parse_error("line " + std::to_string(line_no) + ": expected 'c v color'");
            if (v < 0 || v >= g.vertex_count())
                throw parse_error("line " + std::to_string(line_no) + ": unknown vertex " +
                                  std::to_string(v));
            claimed_colors.emplace_back(v, col);
            continue;
        }
        int u = 0, v = 0, w = 0;
        std::istringstream el(body);
        std::string extra;
        if (!(el >> u >> v >> w) || (el >> extra))
            throw parse_error("line " + std::to_string(line_no) + ": expected 'u v w'");
        int id = (u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count())
                     ? g.edge_index(u, v)
                     : -1;
        if (id < 0)
            throw parse_error("line " + std::to_string(line_no) + ": edge " + std::to_string(u) + " " +
                              std::to_string(v) + " is not in the graph");
        if (wt.w[static_cast<std::size_t>(id)] != -1)
            throw parse_error("line " + std::to_string(line_no) + ": edge " + std::to_string(u) + " " +
                              std::to_string(v) + " weighted twice");
        wt.w[static_cast<std::size_t>(id)] = w;
        saw_zero |= (w == 0);
        saw_two |= (w == 2);
    }
    for (int id = 0; id < g.edge_count(); ++id)
        if (wt.w[static_cast<std::size_t>(id)] == -1)
            throw parse_error("weighting is missing edge " + std::to_string(g.edge(id).u) + " " +
                              std::to_string(g.edge(id).v));
    if (!set_declared) {
        if (saw_zero && saw_two) throw parse_error("weights mix 0 and 2; no weight set fits");
        wt.set = saw_zero ? WeightSet::zero_one : WeightSet::one_two;
    }
    std::vector<int> c = colors(g, wt); // also validates membership
    for (auto [v, col] : claimed_colors)
        if (c[static_cast<std::size_t>(v)] != col)
            throw parse_error("declared color " + std::to_string(col) + " at vertex " +
                              std::to_string(v) + " disagrees with the weights (expected " +
                              std::to_string(c[static_cast<std::size_t>(v)]) + ")");
    return wt;
}

} // namespace vcw
