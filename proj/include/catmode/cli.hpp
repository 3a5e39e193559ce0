#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catmode::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitNumerical = 4;
inline constexpr int kExitCrosscheckFailed = 5;

// Parses args (without the program name), runs one subcommand, writes data to
// `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

// "start:stop:step" -> inclusive grid. Throws std::invalid_argument.
std::vector<double> parse_sweep(const std::string& text);

}  // namespace catmode::cli
