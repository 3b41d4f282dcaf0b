#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multinv {

/// Exit codes: 0 success, 2 parse/validation/usage error, 3 group cap
/// exceeded, 4 internal error (a violated theorem check).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInternal = 4;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multinv
