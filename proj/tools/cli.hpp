#pragma once

#include <ostream>

namespace dispset::cli {

// Exit codes. Stable for scripting.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kOracleDisagreement = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dispset::cli
