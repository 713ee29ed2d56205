#pragma once
#include <string>
#include <vector>

#include "vcw/weighting.hpp"

namespace vcw::cli {

// Exit-code contract: ok 0, infeasible 1, hypothesis-violation 2,
// parse/usage error 3. infeasible is only reported on a completed
// exhaustive or certified search.
enum class Status { ok, infeasible, hypothesis_violation, error };

int exit_code(Status s);
std::string status_name(Status s);

struct CommandResult {
    Status status = Status::ok;
    std::string payload;
    std::vector<std::string> diagnostics;
};

struct WeightOptions {
    WeightSet set = WeightSet::one_two;
    bool fallback_search = false;
    bool json = false;
};

CommandResult cmd_weight(const std::string& graph_text, const WeightOptions& options);
CommandResult cmd_verify(const std::string& graph_text, const std::string& weighting_text);
CommandResult cmd_factor(const std::string& graph_text, const std::string& spec_text);
CommandResult cmd_certificate(const std::string& graph_text, const std::string& spec_text,
                              int limit = 14);
// Families: theta L1 L2 L3.. | gamma-pair | complete-bipartite A B |
// regular-bipartite R N [SEED]. The seed in play is echoed in the output.
CommandResult cmd_gen(const std::string& family, const std::vector<long long>& params);
CommandResult cmd_oracle(const std::string& graph_text, WeightSet set, int budget = 22,
                         bool json = false);

} // namespace vcw::cli
