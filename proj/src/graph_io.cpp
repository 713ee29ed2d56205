#include "vcw/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "vcw/error.hpp"

namespace vcw {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_id(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || value < 0)
        throw parse_error("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                          tok + "'");
    return value;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line; // line number per edge, for diagnostics
    int header_n = -1;
    int max_id = -1;
    bool saw_content = false;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        if (blank_or_comment(line)) continue;
        auto toks = tokens(line);
        if (!saw_content && toks.size() == 2 && toks[0] == "n") {
            header_n = parse_id(toks[1], line_no);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if (toks.size() != 2)
            throw parse_error("line " + std::to_string(line_no) + ": malformed edge line '" + line + "'");
        int u = parse_id(toks[0], line_no);
        int v = parse_id(toks[1], line_no);
        if (u == v) throw parse_error("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        auto key = std::minmax(u, v);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i] == std::pair(key.first, key.second))
                throw parse_error("line " + std::to_string(line_no) + ": duplicate edge " +
                                  std::to_string(key.first) + " " + std::to_string(key.second) +
                                  " (first seen on line " + std::to_string(edge_line[i]) + ")");
        }
        edges.emplace_back(key.first, key.second);
        edge_line.push_back(line_no);
        max_id = std::max(max_id, key.second);
    }
    int n = header_n >= 0 ? header_n : max_id + 1;
    if (max_id >= n)
        throw parse_error("vertex id " + std::to_string(max_id) + " exceeds declared count " +
                          std::to_string(n));
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

} // namespace vcw
