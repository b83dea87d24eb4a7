#ifndef NHEIGHT_CLI_HPP
#define NHEIGHT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nheight::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

// Runs one invocation; `args` excludes the program name. Data goes to `out`
// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Comma-separated nonnegative integers, e.g. "1,2,8,9".
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace nheight::cli

#endif  // NHEIGHT_CLI_HPP
