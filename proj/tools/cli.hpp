#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcn::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 on success, 1 on a failed verification, 2 on unreadable or
/// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcn::cli
