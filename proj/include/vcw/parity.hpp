#pragma once
#include <optional>
#include <string>
#include <vector>

#include "vcw/graph.hpp"

namespace vcw {

// Degree prescription (g, f) with g(v) <= f(v), g(v) = f(v) (mod 2) and
// f(v) >= 0. A factor F obeys it when g(v) <= d_F(v) <= f(v) and
// d_F(v) = f(v) (mod 2) at every vertex. g may be negative, which just
// makes the lower bound vacuous below the parity floor.
class ParitySpec {
public:
    ParitySpec(std::vector<int> lower, std::vector<int> upper);

    int size() const { return static_cast<int>(lower_.size()); }
    int lower(int v) const { return lower_[static_cast<std::size_t>(v)]; }
    int upper(int v) const { return upper_[static_cast<std::size_t>(v)]; }

    int lower_sum(const std::vector<int>& vs) const;
    int upper_sum(const std::vector<int>& vs) const;
    // f(V), whose parity governs how negative a certificate must be.
    int upper_total() const;

    bool admits(int v, int degree) const {
        return degree >= lower(v) && degree <= upper(v) && (degree - upper(v)) % 2 == 0;
    }

private:
    std::vector<int> lower_;
    std::vector<int> upper_;
};

// Edge subset of a fixed parent graph with a precomputed degree sequence.
class Factor {
public:
    Factor(const Graph& parent, std::vector<int> edge_ids);

    const std::vector<int>& edge_ids() const { return edge_ids_; }
    int size() const { return static_cast<int>(edge_ids_.size()); }
    bool contains(int edge_id) const { return member_[static_cast<std::size_t>(edge_id)]; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degree_; }

    bool satisfies(const ParitySpec& spec) const;

private:
    std::vector<int> edge_ids_;
    std::vector<char> member_;
    std::vector<int> degree_;
};

// Disjoint pair (S, T) with its deficiency eta(S,T) and g-odd component
// count tau(S,T). Negative eta certifies that no parity factor exists;
// by parity, eta <= -2 whenever f(V) is even.
struct Certificate {
    std::vector<int> s;
    std::vector<int> t;
    int eta = 0;
    int tau = 0;
};

struct EtaValue {
    int eta = 0;
    int tau = 0;
};

// eta(S,T) = f(S) - g(T) + sum_{x in T} d_{G-S}(x) - tau(S,T), where
// tau counts components C of G-S-T with g(V(C)) + e(V(C),T) odd.
EtaValue eval_eta(const Graph& g, const ParitySpec& spec, const std::vector<int>& s,
                  const std::vector<int>& t);

// Scans all 3^n disjoint (S,T) pairs and returns the minimum-eta
// certificate (lexicographically least pair on ties), or nullopt if every
// eta is nonnegative. Refuses graphs with more than limit vertices.
std::optional<Certificate> find_certificate(const Graph& g, const ParitySpec& spec, int limit = 14);

// Parity-spec document: one line "v g f" per vertex, '#' and blank lines
// ignored; every vertex of the graph must appear exactly once.
ParitySpec parse_parity_spec(const std::string& text, const Graph& g);
std::string format_parity_spec(const ParitySpec& spec);

} // namespace vcw
