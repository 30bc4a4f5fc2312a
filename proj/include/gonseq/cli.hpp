#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonseq::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kContradiction = 3;

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gonseq::cli
