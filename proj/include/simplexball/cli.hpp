#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simplexball::cli {

/// Process exit codes; part of the command-line contract.
enum ExitCode : int {
  kOk = 0,
  kViolation = 2,       // exact-confirmed theorem violation (verify)
  kUsage = 64,          // bad flags or malformed JSON input
  kDegenerate = 65,     // degenerate input simplex
  kNoInput = 66,        // input file cannot be opened
  kInternal = 70,       // internal invariant violation
  kIoError = 74,        // output stream failure
};

/// Runs one command line (without the program name). Machine-readable output
/// goes to `out`, diagnostics and human summaries to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexball::cli
