#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "chepta/cli.hpp"

int main(int argc, char** argv) {
    using namespace chepta;
    CLI::App app{"Determinants, inverses and solves for cyclic heptadiagonal matrices"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string backend = "exact";
    std::string format = "json";
    std::string profile = "general";

    const std::map<std::string, std::string> help = {
        {"det", "determinant by the bordered LU pivot product"},
        {"inv", "exact inverse"},
        {"solve", "solve H x = r"},
        {"gen", "write a random test instance"},
        {"bench", "time det/solve/inv and count field operations"},
        {"oracle-check", "compare the inverse against dense Gauss-Jordan"},
    };
    for (const auto& [name, desc] : help) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--input", cfg.input, "matrix JSON file");
        sub->add_option("--rhs", cfg.rhs, "right-hand side (JSON array or CSV column)");
        sub->add_option("--backend", backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", cfg.tol, "float backend pivot tolerance");
        sub->add_flag("--parallel-seeds", cfg.parallel_seeds, "compute the five seed columns concurrently");
        sub->add_flag("--apply-b-substitution", cfg.apply_b_substitution, "replace zero B_i (i >= 6) by t");
        sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--n", cfg.n, "order for gen/bench");
        sub->add_option("--seed", cfg.seed, "seed for gen/bench");
        sub->add_option("--profile", profile, "general|diagonally-dominant|zero-pivot-prone|zero-C");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::kInvalidInput;
    }

    try {
        cfg.command = cli::parse_command(app.get_subcommands().front()->get_name());
        cfg.backend = backend == "float" ? Backend::float64 : Backend::exact;
        cfg.format = format == "csv" ? cli::OutputFormat::csv : cli::OutputFormat::json;
        cfg.profile = parse_profile(profile);
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return cli::kInvalidInput;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
