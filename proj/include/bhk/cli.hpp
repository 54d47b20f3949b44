#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhk {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotCertified = 2;

/// Runs the command line tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text of a built-in example: "quintic", "chain" or "cubic". Throws
/// InvalidArgument for other names.
std::string example_text(const std::string& name);

} // namespace bhk
