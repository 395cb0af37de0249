#pragma once

#include <stdexcept>
#include <string>

namespace simplexharm {

/// Raised when a caller passes an argument outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal cross-check fails, e.g. a multiplicity that
/// should be an integer is not. Seeing one of these means a bug.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace simplexharm
