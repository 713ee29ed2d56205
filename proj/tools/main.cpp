#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcw/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const vcw::cli::CommandResult& r, const std::string& out_path) {
    for (const std::string& d : r.diagnostics) std::cerr << d << "\n";
    if (!r.payload.empty()) {
        if (out_path == "-") {
            std::cout << r.payload;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write '" << out_path << "'\n";
                return 3;
            }
            out << r.payload;
        }
    }
    if (r.status != vcw::cli::Status::ok)
        std::cerr << "status: " << vcw::cli::status_name(r.status) << "\n";
    return vcw::cli::exit_code(r.status);
}

vcw::WeightSet parse_set(const std::string& name) {
    if (name == "01") return vcw::WeightSet::zero_one;
    if (name == "12") return vcw::WeightSet::one_two;
    throw CLI::ValidationError("--set", "expected 01 or 12");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-coloring edge-weightings of bipartite graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string weighting_path;
    std::string spec_path;
    std::string output = "-";
    std::string set_name = "12";
    std::string family;
    std::vector<long long> params;
    bool fallback = false;
    bool json = false;
    int budget = 22;
    int limit = 14;

    auto* weight = app.add_subcommand("weight", "synthesize a proper edge-weighting");
    weight->add_option("input", input, "edge-list file, - for stdin")->required();
    weight->add_option("--set", set_name, "weight set, 01 or 12")->required();
    weight->add_flag("--fallback-search", fallback,
                     "fall back to the exhaustive oracle when hypotheses fail");
    weight->add_flag("--json", json, "structured output");
    weight->add_option("--output", output, "output path, - for stdout");

    auto* verify = app.add_subcommand("verify", "check a weighting document");
    verify->add_option("input", input)->required();
    verify->add_option("weighting", weighting_path, "weighting document")->required();

    auto* factor = app.add_subcommand("factor", "solve a degree prescription");
    factor->add_option("input", input)->required();
    factor->add_option("spec", spec_path, "lines 'v g f'")->required();
    factor->add_option("--output", output);

    auto* certificate = app.add_subcommand("certificate", "search infeasibility certificates");
    certificate->add_option("input", input)->required();
    certificate->add_option("spec", spec_path, "lines 'v g f'")->required();
    certificate->add_option("--limit", limit, "vertex-count bound for the 3^n scan");
    certificate->add_option("--output", output);

    auto* gen = app.add_subcommand("gen", "emit a graph family member");
    gen->add_option("family", family,
                    "theta | gamma-pair | complete-bipartite | regular-bipartite")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--output", output);

    auto* oracle = app.add_subcommand("oracle", "exhaustive weighting search");
    oracle->add_option("input", input)->required();
    oracle->add_option("--set", set_name, "weight set, 01 or 12")->required();
    oracle->add_option("--budget", budget, "edge budget for the 2^|E| scan");
    oracle->add_flag("--json", json);
    oracle->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (weight->parsed()) {
            vcw::cli::WeightOptions opt;
            opt.set = parse_set(set_name);
            opt.fallback_search = fallback;
            opt.json = json;
            return emit(vcw::cli::cmd_weight(read_input(input), opt), output);
        }
        if (verify->parsed())
            return emit(vcw::cli::cmd_verify(read_input(input), read_input(weighting_path)),
                        output);
        if (factor->parsed())
            return emit(vcw::cli::cmd_factor(read_input(input), read_input(spec_path)), output);
        if (certificate->parsed())
            return emit(vcw::cli::cmd_certificate(read_input(input), read_input(spec_path), limit),
                        output);
        if (gen->parsed()) return emit(vcw::cli::cmd_gen(family, params), output);
        if (oracle->parsed())
            return emit(vcw::cli::cmd_oracle(read_input(input), parse_set(set_name), budget, json),
                        output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 3;
}
