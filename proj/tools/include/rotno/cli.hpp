#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotno::cli {

// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kValidation = 3;
inline constexpr int kBudget = 4;

// Runs one subcommand.  `args` excludes the program name.  All normal output
// goes to `out`, diagnostics to `err`; output is byte-identical across runs
// on identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotno::cli
