#include "vcw/parity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vcw/error.hpp"

namespace vcw {

ParitySpec::ParitySpec(std::vector<int> lower, std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size())
        throw std::invalid_argument("parity spec: g and f must cover the same vertices");
    for (std::size_t v = 0; v < lower_.size(); ++v) {
        if (upper_[v] < 0)
            throw std::invalid_argument("parity spec: f(" + std::to_string(v) + ") is negative");
        if (lower_[v] > upper_[v])
            throw std::invalid_argument("parity spec: g(" + std::to_string(v) + ") exceeds f");
        if (((upper_[v] - lower_[v]) % 2) != 0)
            throw std::invalid_argument("parity spec: g and f disagree mod 2 at vertex " +
                                        std::to_string(v));
    }
}

int ParitySpec::lower_sum(const std::vector<int>& vs) const {
    int sum = 0;
    for (int v : vs) sum += lower(v);
    return sum;
}

int ParitySpec::upper_sum(const std::vector<int>& vs) const {
    int sum = 0;
    for (int v : vs) sum += upper(v);
    return sum;
}

int ParitySpec::upper_total() const {
    int sum = 0;
    for (int f : upper_) sum += f;
    return sum;
}

Factor::Factor(const Graph& parent, std::vector<int> edge_ids)
    : edge_ids_(std::move(edge_ids)),
      member_(static_cast<std::size_t>(parent.edge_count()), 0),
      degree_(static_cast<std::size_t>(parent.vertex_count()), 0) {
    std::sort(edge_ids_.begin(), edge_ids_.end());
    for (std::size_t i = 0; i < edge_ids_.size(); ++i) {
        int id = edge_ids_[i];
        if (id < 0 || id >= parent.edge_count())
            throw std::invalid_argument("factor edge id " + std::to_string(id) + " out of range");
        if (i > 0 && edge_ids_[i - 1] == id)
            throw std::invalid_argument("factor lists edge " + std::to_string(id) + " twice");
        member_[static_cast<std::size_t>(id)] = 1;
        ++degree_[static_cast<std::size_t>(parent.edge(id).u)];
        ++degree_[static_cast<std::size_t>(parent.edge(id).v)];
    }
}

bool Factor::satisfies(const ParitySpec& spec) const {
    for (int v = 0; v < static_cast<int>(degree_.size()); ++v)
        if (!spec.admits(v, degree_[static_cast<std::size_t>(v)])) return false;
    return true;
}

namespace {

void check_spec_size(const Graph& g, const ParitySpec& spec) {
    if (spec.size() != g.vertex_count())
        throw std::invalid_argument("parity spec covers " + std::to_string(spec.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Lexicographic order on the ascending vertex lists of two bit sets.
bool mask_list_less(std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> mask_to_list(std::uint32_t m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

} // namespace

EtaValue eval_eta(const Graph& g, const ParitySpec& spec, const std::vector<int>& s,
                  const std::vector<int>& t) {
    check_spec_size(g, spec);
    const int n = g.vertex_count();
    std::vector<std::int8_t> where(static_cast<std::size_t>(n), 0); // 0 free, 1 in S, 2 in T
    for (int v : s) {
        g.check_vertex(v);
        where[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : t) {
        g.check_vertex(v);
        if (where[static_cast<std::size_t>(v)] == 1)
            throw std::invalid_argument("S and T overlap at vertex " + std::to_string(v));
        where[static_cast<std::size_t>(v)] = 2;
    }

    int tau = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (where[static_cast<std::size_t>(root)] != 0 || seen[static_cast<std::size_t>(root)]) continue;
        int parity = 0;
        std::queue<int> q;
        seen[static_cast<std::size_t>(root)] = 1;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            parity ^= spec.lower(v) & 1;
            for (int w : g.neighbors(v)) {
                if (where[static_cast<std::size_t>(w)] == 2) parity ^= 1; // edge into T
                if (where[static_cast<std::size_t>(w)] == 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        tau += parity;
    }

    int eta = spec.upper_sum(s) - spec.lower_sum(t) - tau;
    for (int x : t) {
        eta += g.degree(x);
        for (int w : g.neighbors(x))
            if (where[static_cast<std::size_t>(w)] == 1) --eta; // d_{G-S}
    }
    return EtaValue{eta, tau};
}

std::optional<Certificate> find_certificate(const Graph& g, const ParitySpec& spec, int limit) {
    check_spec_size(g, spec);
    const int n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("certificate search scans 3^n pairs; graph has " +
                                    std::to_string(n) + " vertices, limit is " + std::to_string(limit));
    if (n > 31) throw std::invalid_argument("certificate search supports at most 31 vertices");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }
    std::uint32_t lower_odd = 0; // vertices with odd g
    for (int v = 0; v < n; ++v)
        if (spec.lower(v) & 1) lower_odd |= std::uint32_t{1} << v;

    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    bool found = false;
    int best_eta = 0;
    int best_tau = 0;
    std::uint32_t best_s = 0, best_t = 0;

    for (std::uint32_t s = 0; s <= full; ++s) {
        const std::uint32_t rest = full & ~s;
        int f_s = 0;
        for (std::uint32_t m = s; m != 0; m &= m - 1) f_s += spec.upper(std::countr_zero(m));
        // Iterate all T subsets of rest, including the empty one.
        std::uint32_t t = rest;
        while (true) {
            std::uint32_t free = rest & ~t;
            int tau = 0;
            std::uint32_t todo = free;
            while (todo != 0) {
                std::uint32_t comp = todo & (~todo + 1);
                std::uint32_t frontier = comp;
                while (frontier != 0) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    std::uint32_t grow = adj[static_cast<std::size_t>(v)] & free & ~comp;
                    comp |= grow;
                    frontier |= grow;
                }
                int parity = std::popcount(comp & lower_odd);
                for (std::uint32_t m = t; m != 0; m &= m - 1)
                    parity += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & comp);
                tau += parity & 1;
                todo &= ~comp;
            }
            int eta = f_s - tau;
            for (std::uint32_t m = t; m != 0; m &= m - 1) {
                int x = std::countr_zero(m);
                eta -= spec.lower(x);
                eta += std::popcount(adj[static_cast<std::size_t>(x)] & ~s);
            }
            if (eta < 0) {
                bool better = !found || eta < best_eta ||
                              (eta == best_eta && (mask_list_less(s, best_s) ||
                                                   (s == best_s && mask_list_less(t, best_t))));
                if (better) {
                    found = true;
                    best_eta = eta;
                    best_tau = tau;
                    best_s = s;
                    best_t = t;
                }
            }
            if (t == 0) break;
            t = (t - 1) & rest;
        }
    }

    if (!found) return std::nullopt;
    return Certificate{mask_to_list(best_s), mask_to_list(best_t), best_eta, best_tau};
}

ParitySpec parse_parity_spec(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    const int n = g.vertex_count();
    std::vector<int> lower(static_cast<std::size_t>(n), 0);
    std::vector<int> upper(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        bool blank = true;
        for (char c : line) {
            if (c == '#') break;
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        std::istringstream ls(line);
        int v = 0, gv = 0, fv = 0;
        std::string extra;
        if (!(ls >> v >> gv >> fv) || (ls >> extra))
            throw parse_error("line " + std::to_string(line_no) + ": expected 'v g f'");
        if (v < 0 || v >= n)
            throw parse_error("line " + std::to_string(line_no) + ": unknown vertex " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v)])
            throw parse_error("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                              " listed twice");
        seen[static_cast<std::size_t>(v)] = 1;
        lower[static_cast<std::size_t>(v)] = gv;
        upper[static_cast<std::size_t>(v)] = fv;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw parse_error("parity spec is missing vertex " + std::to_string(v));
    return ParitySpec(std::move(lower), std::move(upper));
}

std::string format_parity_spec(const ParitySpec& spec) {
    std::ostringstream out;
    for (int v = 0; v < spec.size(); ++v)
        out << v << " " << spec.lower(v) << " " << spec.upper(v) << "\n";
    return out.str();
}

} // namespace vcw
