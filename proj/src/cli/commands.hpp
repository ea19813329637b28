// Subcommand layer of the cgc tool: instance generation, solver runs, bounds,
// exact values, heuristics, one-shot local search, IP export, and benchmark
// batches. Kept as a library so tests can drive the full argument parser
// in-process.

#ifndef CGC_CLI_COMMANDS_HPP
#define CGC_CLI_COMMANDS_HPP

#include <string>
#include <vector>

namespace cgc::cli {

// Parses the argument vector (without the program name) and runs the chosen
// subcommand. Returns the process exit code: 0 success, 1 error, 2 refusal
// (instance beyond an exact-search budget).
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace cgc::cli

#endif
