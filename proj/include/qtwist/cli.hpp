#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtwist::cli {

/// Runs the command-line front end on the given arguments (no program name).
/// Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtwist::cli
