#pragma once

#include <stdexcept>
#include <string>

namespace morse {

/// Raised for invalid input or violated preconditions of a domain operation.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a construction produces a result that breaks its own
/// guarantees. Seeing one of these means there is a bug in this library.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal error: " + what) {}
};

}  // namespace morse
