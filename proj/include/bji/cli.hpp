#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bji::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;
inline constexpr int kDisagreement = 3;

/// Runs the command line `args` (args[0] is the program name). Standard
/// input is read from `in` when a path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bji::cli
