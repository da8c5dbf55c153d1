#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lepkit {

// Exit codes besides the distinguish verdicts (0, 1, 2).
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace lepkit
