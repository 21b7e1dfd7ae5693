#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace listpack::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,  // no packing / witness found / randomized packer gave up
    exit_budget = 2,
    exit_usage = 64,
    exit_bad_input = 65,
    exit_internal = 70,
};

/// Runs one command line (without the program name). Records go to `out`,
/// one JSON object per line; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs an experiment config (JSON text) and writes the JSON-lines report.
/// Throws std::invalid_argument on a config schema error.
void run_experiments(const std::string& config, std::ostream& report, int threads);

}  // namespace listpack::cli
