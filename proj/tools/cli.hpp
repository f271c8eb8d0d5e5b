#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing so tests can drive it with string streams.

#include <iosfwd>
#include <string>

namespace semitoric::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArgs = 2,
  kDegenerate = 3,
  kIoError = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

/// Worker count for sweeps: SEMITORIC_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int thread_count();

}  // namespace semitoric::cli
