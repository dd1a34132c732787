#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCoverageGap = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of the pqs tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqs
