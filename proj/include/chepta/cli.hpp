#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "chepta/linear_solve.hpp"
#include "chepta/random_instance.hpp"

namespace chepta::cli {

enum class Command { det, inv, solve, gen, bench, oracle_check };
enum class OutputFormat { json, csv };

enum ExitCode : int {
    kOk = 0,
    kSingular = 2,
    kInvalidInput = 3,
    kInternal = 4,
};

struct RunConfig {
    Command command = Command::det;
    std::string input;
    std::string rhs;
    std::string out;  ///< empty: write to the output stream
    Backend backend = Backend::exact;
    double tol = 1e-12;
    bool parallel_seeds = false;
    bool apply_b_substitution = false;
    OutputFormat format = OutputFormat::json;
    int n = 10;
    std::uint64_t seed = 0;
    Profile profile = Profile::general;
};

Command parse_command(const std::string& name);

/// Executes one command. The artifact goes to cfg.out (or `out`), diagnostics
/// to `err`. Returns one of ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace chepta::cli
