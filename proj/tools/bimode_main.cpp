// bimode — CLI for the coupled two-mode dynamics toolkit.
//
//   bimode greens   [--config FILE] [--out PATH]
//   bimode compare  [--config FILE] [--tolerance X] [--n-max N] [--out PATH]
//   bimode fig1     --variant {a,b,c,d} [--out PATH]
//   bimode validate
//
// Exit codes: 0 success, 1 validation/tolerance failure, 2 configuration
// error, 3 truncation sentinel.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bimode/commands.hpp"
#include "bimode/config.hpp"
#include "bimode/errors.hpp"

namespace {

struct OutputTarget {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream{&std::cout};
};

OutputTarget open_output(const std::string& path) {
    OutputTarget target;
    if (path.empty() || path == "-" || path == "stdout") return target;
    target.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*target.file) throw bimode::ConfigError(path + ": cannot open output file");
    target.stream = target.file.get();
    return target;
}

bimode::RunConfig load_config(const std::string& config_path, int n_max_override) {
    bimode::RunConfig cfg = config_path.empty() ? bimode::default_run_config()
                                                : bimode::parse_config_file(config_path);
    if (n_max_override > 0) cfg.n_max = n_max_override;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynamics of two linearly coupled bosonic modes: "
                 "Green functions, reduced density matrices, and an exact-"
                 "diagonalization cross-check"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string variant = "a";
    double tolerance = 1e-7;
    int n_max_override = 0;

    CLI::App* greens = app.add_subcommand("greens", "Green-function time series as CSV");
    greens->add_option("--config", config_path, "Config file (INI-style)");
    greens->add_option("--out", out_path, "Output path or '-' for stdout");

    CLI::App* compare = app.add_subcommand(
        "compare", "Analytical reduced state vs exact-evolution oracle");
    compare->add_option("--config", config_path, "Config file (INI-style)");
    compare->add_option("--tolerance", tolerance, "Max allowed trace distance");
    compare->add_option("--n-max", n_max_override, "Override the Fock truncation");
    compare->add_option("--out", out_path, "Output path or '-' for stdout");

    CLI::App* fig1 = app.add_subcommand("fig1", "Canned mixedness sweeps as CSV");
    fig1->add_option("--variant", variant, "Panel: a, b, c, or d");
    fig1->add_option("--out", out_path, "Output path or '-' for stdout");

    app.add_subcommand("validate", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bimode::kExitConfigError;
    }

    try {
        if (greens->parsed()) {
            OutputTarget target = open_output(out_path);
            return bimode::cmd_greens(load_config(config_path, 0), *target.stream);
        }
        if (compare->parsed()) {
            OutputTarget target = open_output(out_path);
            return bimode::cmd_compare(load_config(config_path, n_max_override), tolerance,
                                       *target.stream, std::cerr);
        }
        if (fig1->parsed()) {
            if (variant.size() != 1) {
                throw bimode::ConfigError("fig1: variant must be a single letter (a-d)");
            }
            OutputTarget target = open_output(out_path);
            return bimode::cmd_fig1(variant[0], *target.stream);
        }
        return bimode::cmd_validate(std::cout);
    } catch (const bimode::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return bimode::kExitConfigError;
    } catch (const bimode::TruncationError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return bimode::kExitTruncation;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return bimode::kExitConfigError;
    }
}
