#ifndef DBCLOSURE_TOOLS_CLI_HPP
#define DBCLOSURE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dbclosure::cli {

inline constexpr const char *kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNotBalanced = 2;
inline constexpr int kUnsupportedFamily = 3;
inline constexpr int kBudgetExceeded = 4;

/// Runs one dbtool invocation.  `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dbclosure::cli

#endif
