#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ilseq {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerifyFailed = 3;

// Full command-line driver, callable in-process for testing. args excludes
// the program name. All normal output goes to out, diagnostics to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ilseq
