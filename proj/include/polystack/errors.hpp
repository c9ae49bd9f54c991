#pragma once

#include <stdexcept>
#include <string>

namespace polystack {

// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  Parse = 2,       // malformed input text or file
  Invariant = 3,   // input data violates a documented precondition
  Unsupported = 4, // request is well-formed but outside what we handle
  Internal = 5,    // a supposedly-impossible state was reached
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace polystack
