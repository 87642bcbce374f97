#ifndef PARRYAC_TOOLS_CLI_HPP
#define PARRYAC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace parryac::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUnstable = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitUnsupported = 65;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parryac::cli

#endif  // PARRYAC_TOOLS_CLI_HPP
