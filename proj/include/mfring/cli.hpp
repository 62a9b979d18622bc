#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 unknown form, group, case or identity, 3 bad configuration.

#include <iosfwd>
#include <string>
#include <vector>

namespace mfring {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitConfig = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfring
