#pragma once

#include <atomic>
#include <iosfwd>

namespace foulkes::cli {

enum ExitCode : int {
    kOk = 0,
    kDiscrepancy = 1,
    kInputError = 2,
    kBudgetExceeded = 3,
    kInterrupted = 4,
};

/// Set from a signal handler to stop long computations; checked cooperatively.
std::atomic<bool>& stop_flag();

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace foulkes::cli
