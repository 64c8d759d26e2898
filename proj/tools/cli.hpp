#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfischer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (args excludes the program name). JSON goes to `out`,
/// diagnostics to `err`; `in` serves "--input -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hfischer::cli
