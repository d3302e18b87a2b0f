#pragma once

#include <ostream>

namespace ospchar::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // a verification failed
inline constexpr int kUsage = 2;   // bad flags or parameters out of range

/// Entry point of the `ospchar` tool: compute / enumerate / verify / suite.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ospchar::cli
