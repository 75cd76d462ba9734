#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsing::cli {

/// Runs one command. `args[0]` is the program name. Returns 0 on success, 2
/// on invalid input and 1 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permsing::cli
