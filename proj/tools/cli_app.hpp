#pragma once

#include <ostream>

namespace rootnum::cli {

// Exit codes of the rootnum command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitModelSearch = 3;
inline constexpr int kExitFailure = 4;

/// Entry point behind main(); writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootnum::cli
