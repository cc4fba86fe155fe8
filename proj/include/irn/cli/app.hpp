#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace irn::cli {

/// Exit codes: 0 success / verified, 1 counterexample found, 2 usage error
/// (also used for runs that stop before completing).
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). `cancel`, when
/// given, is polled by checkpointed scans.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace irn::cli
