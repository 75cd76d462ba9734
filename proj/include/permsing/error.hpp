#pragma once

#include <stdexcept>
#include <string>

namespace permsing {

/// Raised for inputs violating an operation's preconditions. The CLI maps it
/// to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace permsing
