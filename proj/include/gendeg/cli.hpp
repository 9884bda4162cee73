#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gendeg/sweep.hpp"

namespace gendeg {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1; // --strict with a failing check
inline constexpr int kExitParseError = 2;
inline constexpr int kExitNumericError = 3;
inline constexpr int kExitUsageError = 64;

struct RunConfig {
    enum class Command { compute, sweep, watershed, check, iterate, solitariness };
    enum class Format { json, csv };

    Command command = Command::compute;
    std::string input_path;
    std::optional<double> epsilon;
    std::optional<EpsilonGrid> grid;
    double tol = kDefaultSolverTol;
    double tie_tol = kDefaultTieTol;
    std::optional<Format> format; // default depends on the command
    std::string output_path;      // empty: standard output
    bool strict = false;
    std::uint64_t seed = 1;
    int k_max = kDefaultNeumannCap;
    double alpha = 1.0;

    // check selectors
    bool check_arm = false;
    bool check_iic = false;
    bool check_scb = false;
    bool check_suite = false;
    bool arm_sweep = false;
    std::optional<std::pair<std::string, std::string>> edge; // labels
    int scb_n = 0;
    std::vector<double> suite_epsilons;
    int sweep_graphs = 200;
    int sweep_edits = 20;
};

/// Executes one validated configuration. Writes the artifact to
/// config.output_path or `out`; diagnostics go to `err`. Returns an exit
/// code from the table above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full front end: argv parsing on top of run().
int cli_main(int argc, const char* const* argv,
             std::ostream& out = std::cout, std::ostream& err = std::cerr);

} // namespace gendeg
