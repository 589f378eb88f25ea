// Command-line front end: runs the reference-state solvers and comparisons
// and writes plot-ready CSV/JSON series.
//
// Exit codes: 0 success, 2 usage error, 3 solver could not bracket a root.

#include "ssr/cli.hpp"
#include "ssr/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

int parse_and_run(int argc, char** argv) {
    CLI::App app{"Accessible-entanglement reference state toolkit"};
    app.require_subcommand(1);

    ssr::cli::RunConfig config;
    std::string format = "csv";
    std::string phases = "zero";
    std::string sweep_range;

    const std::map<std::string, ssr::cli::PhaseAssignment> phase_names{
        {"zero", ssr::cli::PhaseAssignment::Zero},
        {"linear", ssr::cli::PhaseAssignment::Linear},
        {"random", ssr::cli::PhaseAssignment::Random},
        {"kerr", ssr::cli::PhaseAssignment::Kerr},
    };

    auto add_common = [&](CLI::App* cmd, bool needs_m) {
        auto* m = cmd->add_option("--M", config.total, "total particles in the reference ancilla");
        if (needs_m) m->required();
        cmd->add_option("--tol", config.tol, "solver tolerance")->capture_default_str();
        cmd->add_option("--out", config.output_path, "output file path")->required();
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    auto* opt_single = app.add_subcommand("optimize-single",
                                          "optimal reference state for a single shared particle");
    add_common(opt_single, true);

    auto* opt_shared = app.add_subcommand(
        "optimize-shared", "optimal reference state for the N = M shared-phase system");
    add_common(opt_shared, true);
    opt_shared->add_option("--N", config.system_total,
                           "system particle count; the solver covers N = M only");

    auto* ansatz = app.add_subcommand("ansatz", "exact and large-M closed forms side by side");
    add_common(ansatz, true);

    auto* compare = app.add_subcommand("compare", "figure-of-merit table across reference families");
    add_common(compare, false);
    compare->add_option("--family", config.family,
                        "restrict to one family: optimal, berry-wiseman, summy-pegg, coherent, "
                        "binomial, shared-phase");
    compare->add_option("--sweep-range", sweep_range, "A:B inclusive range of M values");

    auto* phase = app.add_subcommand("phase", "phase-difference probability density");
    add_common(phase, true);
    phase->add_option("--points", config.points, "grid size, at least 4*(M+1); 0 selects 4*(M+1)");
    phase->add_option("--seed", config.seed, "seed for the random phase assignment")
        ->capture_default_str();
    phase->add_option("--phases", phases, "phase assignment: zero, linear, random or kerr")
        ->check(CLI::IsMember({"zero", "linear", "random", "kerr"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "optimal-reference entanglement across M");
    add_common(sweep, false);
    sweep->add_option("--sweep-range", sweep_range, "A:B inclusive range of M values");

    auto* polys = app.add_subcommand("polys", "stationarity polynomial table and beta-root check");
    add_common(polys, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opt_single->parsed()) config.command = ssr::cli::Command::OptimizeSingle;
    if (opt_shared->parsed()) config.command = ssr::cli::Command::OptimizeShared;
    if (ansatz->parsed()) config.command = ssr::cli::Command::Ansatz;
    if (compare->parsed()) config.command = ssr::cli::Command::Compare;
    if (phase->parsed()) config.command = ssr::cli::Command::Phase;
    if (sweep->parsed()) config.command = ssr::cli::Command::Sweep;
    if (polys->parsed()) config.command = ssr::cli::Command::Polys;

    config.format = (format == "json") ? ssr::cli::OutputFormat::Json : ssr::cli::OutputFormat::Csv;
    config.phases = phase_names.at(phases);
    if (!sweep_range.empty()) {
        const auto colon = sweep_range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "ssrent: --sweep-range expects A:B\n";
            return 2;
        }
        try {
            config.sweep_begin = std::stoi(sweep_range.substr(0, colon));
            config.sweep_end = std::stoi(sweep_range.substr(colon + 1));
        } catch (const std::exception&) {
            std::cerr << "ssrent: --sweep-range expects integer A:B\n";
            return 2;
        }
    }

    ssr::cli::run(config);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return parse_and_run(argc, argv);
    } catch (const ssr::no_root_error& e) {
        std::cerr << "ssrent: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ssrent: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ssrent: " << e.what() << "\n";
        return 1;
    }
}
