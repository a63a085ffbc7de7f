#pragma once

#include <ostream>

namespace threeterm::cli {

// Process exit codes of the threeterm tool.
enum ExitCode : int {
  kOk = 0,
  kRelationFailure = 1,  // a relation or identity missed the tolerance
  kParseError = 2,       // unreadable file, malformed document, bad arguments
  kInvalidInput = 3,     // configuration or tuple violates its invariants
  kOrbitMismatch = 4,    // different torus orbits, or off-quadric input
};

// Runs one command line (argv[0] is the program name) and returns the exit
// code. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace threeterm::cli
