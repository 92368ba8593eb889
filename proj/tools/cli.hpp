#pragma once

#include <ostream>

namespace rodrigues::cli {

// Exit codes: 0 verified, 1 identity violated, 2 usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rodrigues::cli
