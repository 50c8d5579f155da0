#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "milnor/cli.hpp"
#include "milnor/version.hpp"

namespace {

int emit(const milnor::cli::Outcome &outcome,
         const std::optional<std::string> &output_path) {
    if (output_path)
        milnor::save_json(*output_path, outcome.report);
    else
        std::cout << outcome.report.dump(2) << '\n';
    return outcome.exit_code;
}

std::vector<std::int64_t> parse_twists(const std::string &csv) {
    std::vector<std::int64_t> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string part =
            csv.substr(start, comma == std::string::npos ? std::string::npos
                                                         : comma - start);
        out.push_back(std::stoll(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Milnor invariants for braid-encoded tangles and clover links"};
    app.set_version_flag("--version", milnor::kVersion);
    app.require_subcommand(1);

    std::string file, file2, pattern_file, mode = "auto", twists_csv;
    std::optional<std::string> output_path;
    int length = 0, bound = 0;
    milnor::cli::ComputeFlags flags;

    CLI::App *compute = app.add_subcommand(
        "compute", "Milnor numbers / mu-bar / clover values of one input");
    compute->add_option("file", file)->required();
    compute->add_option("--length", length, "maximum sequence length")
        ->required();
    compute->add_flag("--non-repeated", flags.non_repeated);
    compute->add_flag("--mu-bar", flags.mu_bar,
                      "close the tangle and report mu-bar residues");
    compute->add_flag("--representative-mu", flags.representative_mu,
                      "plain mu of a closure (representative-dependent)");
    compute->add_option("-o,--output", output_path);

    CLI::App *compare =
        app.add_subcommand("compare", "edge-homotopy comparison of two inputs");
    compare->add_option("file1", file)->required();
    compare->add_option("file2", file2)->required();
    compare->add_option("--mode", mode, "auto|n3|half|ehck:K");
    compare->add_option("--length", length)->required();
    compare->add_option("-o,--output", output_path);

    CLI::App *slmove = app.add_subcommand("slmove", "apply an SL-move");
    slmove->add_option("file", file)->required();
    slmove->add_option("--pattern", pattern_file)->required();
    slmove->add_option("--twists", twists_csv, "comma-separated full twists");
    slmove->add_option("-o,--output", output_path);

    CLI::App *nf = app.add_subcommand("normal-form",
                                      "link-homotopy normal form into commutator string links");
    nf->add_option("file", file)->required();
    nf->add_option("--length", length)->required();
    nf->add_option("-o,--output", output_path);

    CLI::App *certify = app.add_subcommand(
        "certify", "certified length of clover Milnor numbers");
    certify->add_option("file", file)->required();
    certify->add_option("--bound", bound)->required();
    certify->add_option("-o,--output", output_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return emit(milnor::cli::run_compute(file, length, flags),
                        output_path);
        if (compare->parsed())
            return emit(milnor::cli::run_compare(file, file2, mode, length),
                        output_path);
        if (slmove->parsed())
            return emit(milnor::cli::run_slmove(file, pattern_file,
                                                parse_twists(twists_csv)),
                        output_path);
        if (nf->parsed())
            return emit(milnor::cli::run_normal_form(file, length),
                        output_path);
        if (certify->parsed())
            return emit(milnor::cli::run_certify(file, bound), output_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
